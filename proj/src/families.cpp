#include "swapalg/families.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "swapalg/error.hpp"
#include "swapalg/oracle.hpp"

namespace swapalg {

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxDegree) fail(Errc::out_of_range, "degree must lie in 1.." + std::to_string(kMaxDegree));
}

template <class Keep>
std::vector<Permutation> filtered(int n, Keep keep) {
  check_n(n);
  if (n > 12) fail(Errc::degree_cap, "enumerating S_" + std::to_string(n) + " is too large");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    auto p = Permutation::from_images(img);
    if (keep(p)) out.push_back(p);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

std::vector<Permutation> all_permutations(int n) {
  return filtered(n, [](const Permutation&) { return true; });
}

std::vector<Permutation> involutions(int n) {
  return filtered(n, [](const Permutation& p) { return is_involution(p); });
}

std::vector<Permutation> special_permutations(int n) {
  return filtered(n, [](const Permutation& p) { return is_special(p); });
}

std::vector<Permutation> good_permutations(int n, int d) {
  if (d < 1) fail(Errc::invalid_argument, "d must be positive");
  return filtered(n, [d](const Permutation& p) { return is_good(p, d); });
}

std::vector<Permutation> transpositions_plus_identity(int n) {
  check_n(n);
  std::vector<Permutation> out{Permutation(n)};
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(Permutation::from_cycles(n, {{i, j}}));
  return out;
}

std::vector<AlgebraElement> antisymmetric_specials(int n) {
  std::vector<AlgebraElement> out;
  const auto invols = involutions(n);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        const auto t = Permutation::from_cycles(n, {{a, b, c}});
        const AlgebraElement diff = AlgebraElement(t) - AlgebraElement(inverse(t));
        for (const auto& inv : invols) {
          if (inv(a) != a || inv(b) != b || inv(c) != c) continue;
          out.push_back(diff * AlgebraElement(inv));
        }
      }
  return out;
}

std::uint64_t symmetric_dim(int n) {
  static constexpr std::array<std::uint64_t, 10> kTable{1, 2, 4, 10, 26, 76, 232, 750, 2494, 8524};
  if (n < 1) fail(Errc::out_of_range, "n must be at least 1");
  if (n <= 10) return kTable[n - 1];
  return gram_rank(involutions(n));
}

Family parse_family(std::string_view name) {
  if (name == "all") return Family::All;
  if (name == "involutions") return Family::Involutions;
  if (name == "specials") return Family::Specials;
  if (name == "3good") return Family::ThreeGood;
  if (name == "transpositions-plus-id") return Family::TranspositionsPlusIdentity;
  fail(Errc::invalid_argument, "unknown family '" + std::string(name) + "'");
}

std::string to_string(Family family) {
  switch (family) {
    case Family::All: return "all";
    case Family::Involutions: return "involutions";
    case Family::Specials: return "specials";
    case Family::ThreeGood: return "3good";
    case Family::TranspositionsPlusIdentity: return "transpositions-plus-id";
  }
  return "?";
}

std::vector<Permutation> family_members(Family family, int n) {
  switch (family) {
    case Family::All: return all_permutations(n);
    case Family::Involutions: return involutions(n);
    case Family::Specials: return special_permutations(n);
    case Family::ThreeGood: return good_permutations(n, 2);
    case Family::TranspositionsPlusIdentity: return transpositions_plus_identity(n);
  }
  fail(Errc::internal, "unknown family");
}

}  // namespace swapalg
