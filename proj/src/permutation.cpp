#include "swapalg/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "swapalg/error.hpp"

namespace swapalg {

namespace {

void check_degree(int n) {
  if (n < 1 || n > kMaxDegree)
    fail(Errc::out_of_range, "degree " + std::to_string(n) + " outside 1.." + std::to_string(kMaxDegree));
}

void check_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    fail(Errc::degree_mismatch, "degree mismatch: " + std::to_string(p.degree()) + " vs " +
                                    std::to_string(q.degree()));
}

}  // namespace

Permutation::Permutation(int n) {
  check_degree(n);
  n_ = static_cast<std::uint8_t>(n);
  for (int k = 0; k < n; ++k) image_[k] = static_cast<std::uint8_t>(k + 1);
}

Permutation Permutation::from_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  check_degree(n);
  std::array<bool, kMaxDegree + 1> seen{};
  Permutation p(n);
  for (int k = 0; k < n; ++k) {
    const int v = images[k];
    if (v < 1 || v > n || seen[v])
      fail(Errc::parse, "one-line form is not a bijection of {1.." + std::to_string(n) + "}");
    seen[v] = true;
    p.image_[k] = static_cast<std::uint8_t>(v);
  }
  return p;
}

Permutation Permutation::from_images(std::initializer_list<int> images) {
  return from_images(std::span<const int>(images.begin(), images.size()));
}

Permutation Permutation::from_cycles(int n, const std::vector<Cycle>& cycles) {
  Permutation p(n);
  std::array<bool, kMaxDegree + 1> seen{};
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int a = c[i];
      if (a < 1 || a > n)
        fail(Errc::out_of_range, "point " + std::to_string(a) + " outside 1.." + std::to_string(n));
      if (seen[a]) fail(Errc::parse, "point " + std::to_string(a) + " repeated in cycle form");
      seen[a] = true;
      p.image_[a - 1] = static_cast<std::uint8_t>(c[(i + 1) % c.size()]);
    }
  }
  return p;
}

std::vector<int> Permutation::images() const { return {image_.begin(), image_.begin() + n_}; }

bool Permutation::is_identity() const noexcept {
  for (int k = 0; k < n_; ++k)
    if (image_[k] != k + 1) return false;
  return true;
}

Permutation Permutation::extended(int m) const {
  if (m < n_) fail(Errc::out_of_range, "cannot shrink a permutation of degree " + std::to_string(n_));
  Permutation p(m);
  std::copy_n(image_.begin(), n_, p.image_.begin());
  return p;
}

std::size_t Permutation::hash() const noexcept {
  // FNV-1a over the live images.
  std::uint64_t h = 1469598103934665603ull ^ n_;
  for (int k = 0; k < n_; ++k) {
    h ^= image_[k];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::vector<int> CycleDecomposition::lengths() const {
  std::vector<int> out;
  out.reserve(cycles.size());
  for (const auto& c : cycles) out.push_back(static_cast<int>(c.size()));
  return out;
}

std::vector<int> TableauPair::shape() const {
  std::vector<int> out;
  for (const auto& row : p_tableau) out.push_back(static_cast<int>(row.size()));
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  check_same_degree(p, q);
  Permutation r = p;
  for (int k = 0; k < p.n_; ++k) r.image_[k] = p.image_[q.image_[k] - 1];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r = p;
  for (int k = 0; k < p.n_; ++k) r.image_[p.image_[k] - 1] = static_cast<std::uint8_t>(k + 1);
  return r;
}

Permutation conjugate(const Permutation& p, const Permutation& by) {
  check_same_degree(p, by);
  // by p by^-1 sends by(k) to by(p(k)).
  Permutation r = p;
  for (int k = 0; k < p.n_; ++k) r.image_[by.image_[k] - 1] = by.image_[p.image_[k] - 1];
  return r;
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  CycleDecomposition out;
  out.degree = p.degree();
  std::array<bool, kMaxDegree + 1> seen{};
  for (int start = 1; start <= p.degree(); ++start) {
    if (seen[start]) continue;
    Cycle c;
    for (int a = start; !seen[a]; a = p(a)) {
      seen[a] = true;
      c.push_back(a);
    }
    out.cycles.push_back(std::move(c));
  }
  return out;
}

int cycle_count(const Permutation& p) {
  std::array<bool, kMaxDegree + 1> seen{};
  int count = 0;
  for (int start = 1; start <= p.degree(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (int a = start; !seen[a]; a = p(a)) seen[a] = true;
  }
  return count;
}

std::vector<int> cycle_type(const Permutation& p) {
  auto lengths = cycle_decomposition(p).lengths();
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

int longest_cycle(const Permutation& p) { return cycle_type(p).front(); }

PermutationClass classify(const Permutation& p) {
  int threes = 0;
  for (int len : cycle_decomposition(p).lengths()) {
    if (len > 3) return PermutationClass::NonSpecial;
    if (len == 3) ++threes;
  }
  if (threes == 0) return PermutationClass::Involution;
  return threes == 1 ? PermutationClass::SpecialWithThreeCycle : PermutationClass::NonSpecial;
}

int sign(const Permutation& p) { return (p.degree() - cycle_count(p)) % 2 == 0 ? 1 : -1; }

TableauPair rsk(const Permutation& p) {
  TableauPair t;
  for (int k = 1; k <= p.degree(); ++k) {
    int x = p(k);
    std::size_t row = 0;
    for (;; ++row) {
      if (row == t.p_tableau.size()) {
        t.p_tableau.push_back({x});
        t.q_tableau.push_back({k});
        break;
      }
      auto& r = t.p_tableau[row];
      auto it = std::upper_bound(r.begin(), r.end(), x);
      if (it == r.end()) {
        r.push_back(x);
        t.q_tableau[row].push_back(k);
        break;
      }
      std::swap(x, *it);
    }
  }
  return t;
}

int longest_decreasing_subsequence(const Permutation& p) {
  // Patience sorting on the negated sequence.
  std::vector<int> tails;
  for (int k = 1; k <= p.degree(); ++k) {
    const int v = -p(k);
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end())
      tails.push_back(v);
    else
      *it = v;
  }
  return static_cast<int>(tails.size());
}

bool is_good(const Permutation& p, int d) {
  if (d < 1) fail(Errc::invalid_argument, "goodness parameter d must be positive");
  const int lds = longest_decreasing_subsequence(p);
  const int height = rsk(p).height();
  if (lds != height)
    fail(Errc::internal, "Schensted mismatch for " + to_one_line_string(p));
  return lds <= d;
}

bool find_decreasing_triple(const Permutation& p, std::array<int, 3>& positions) {
  const int n = p.degree();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (p(j) >= p(i)) continue;
      for (int k = j + 1; k <= n; ++k)
        if (p(k) < p(j)) {
          positions = {i, j, k};
          return true;
        }
    }
  return false;
}

mpz_class catalan(int n) {
  if (n < 1) fail(Errc::out_of_range, "catalan requires n >= 1");
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), 2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  return b / (n + 1);
}

mpz_class involution_count(int n) {
  if (n < 1) fail(Errc::out_of_range, "involution_count requires n >= 1");
  mpz_class prev = 1, cur = 1;  // I(0), I(1)
  for (int k = 2; k <= n; ++k) {
    mpz_class next = cur + (k - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::string to_cycle_string(const Permutation& p) {
  std::ostringstream os;
  for (const auto& c : cycle_decomposition(p).cycles) {
    if (c.size() < 2) continue;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ')';
  }
  const auto s = os.str();
  return s.empty() ? "()" : s;
}

std::string to_one_line_string(const Permutation& p) {
  std::ostringstream os;
  os << '[';
  for (int k = 1; k <= p.degree(); ++k) os << (k > 1 ? "," : "") << p(k);
  os << ']';
  return os.str();
}

std::string to_string(const CycleDecomposition& c) {
  std::ostringstream os;
  for (const auto& cyc : c.cycles) {
    os << '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) os << (i ? "," : "") << cyc[i];
    os << ')';
  }
  return os.str();
}

std::string to_string(PermutationClass c) {
  switch (c) {
    case PermutationClass::Involution: return "Involution";
    case PermutationClass::SpecialWithThreeCycle: return "SpecialWithThreeCycle";
    case PermutationClass::NonSpecial: return "NonSpecial";
  }
  return "?";
}

}  // namespace swapalg
