#include <doctest.h>

#include <algorithm>
#include <set>

#include "support.hpp"
#include "swapalg/error.hpp"
#include "swapalg/families.hpp"
#include "swapalg/permutation.hpp"

using namespace swapalg;

namespace {

Permutation cyc(int n, std::vector<Cycle> cycles) { return Permutation::from_cycles(n, cycles); }

/// Brute-force longest decreasing subsequence over all index subsets.
int brute_lds(const Permutation& p) {
  const int n = p.degree();
  int best = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int prev = n + 1, len = 0;
    bool ok = true;
    for (int k = 1; k <= n && ok; ++k)
      if (mask & (1u << (k - 1))) {
        ok = p(k) < prev;
        prev = p(k);
        ++len;
      }
    if (ok) best = std::max(best, len);
  }
  return best;
}

bool standard(const Tableau& t) {
  for (std::size_t r = 0; r < t.size(); ++r)
    for (std::size_t c = 0; c < t[r].size(); ++c) {
      if (c + 1 < t[r].size() && t[r][c] >= t[r][c + 1]) return false;
      if (r + 1 < t.size() && c < t[r + 1].size() && t[r][c] >= t[r + 1][c]) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("construction validates bijections") {
  CHECK(Permutation::from_images({3, 1, 2}).degree() == 3);
  CHECK_THROWS_AS(Permutation::from_images({1, 1, 2}), Error);
  CHECK_THROWS_AS(Permutation::from_images({0, 1}), Error);
  CHECK_THROWS_AS(Permutation::from_images({1, 4, 2}), Error);
  CHECK_THROWS_AS(cyc(3, {{1, 2}, {2, 3}}), Error);
  CHECK_THROWS_AS(cyc(3, {{1, 4}}), Error);
  CHECK(Permutation(3) != Permutation(4));
  CHECK(Permutation(4).is_identity());
}

TEST_CASE("composition applies the right factor first") {
  const auto p = cyc(6, {{1, 2, 3}});
  const auto q = cyc(6, {{1, 5, 4, 6}});
  CHECK(compose(p, q) == cyc(6, {{1, 5, 4, 6, 2, 3}}));
  const auto id = Permutation(6);
  CHECK(compose(id, q) == q);
  CHECK(compose(q, id) == q);

  // (1,2)(1,3): compare against k -> p(q(k)) computed by hand
  const auto a = cyc(3, {{1, 2}});
  const auto b = cyc(3, {{1, 3}});
  std::vector<int> img;
  for (int k = 1; k <= 3; ++k) img.push_back(a(b(k)));
  CHECK(compose(a, b) == Permutation::from_images(img));
  CHECK(compose(a, b) == cyc(3, {{1, 3, 2}}));
  CHECK_THROWS_AS(compose(a, Permutation(4)), Error);
}

TEST_CASE("group axioms on S4 and inverses on S6") {
  const auto s4 = test::every_permutation(4);
  for (const auto& p : s4)
    for (const auto& q : s4)
      for (const auto& r : s4) REQUIRE(compose(compose(p, q), r) == compose(p, compose(q, r)));
  for (const auto& p : test::every_permutation(6)) {
    REQUIRE(compose(p, inverse(p)).is_identity());
    REQUIRE(compose(inverse(p), p).is_identity());
  }
  CHECK(inverse(cyc(3, {{1, 2}})) == cyc(3, {{1, 2}}));
  CHECK(inverse(cyc(3, {{1, 2, 3}})) == cyc(3, {{1, 3, 2}}));
}

TEST_CASE("cycle decomposition is canonical and round-trips") {
  const auto p = Permutation::from_images({3, 4, 1, 2});
  CHECK(cycle_decomposition(p).cycles == std::vector<Cycle>{{1, 3}, {2, 4}});
  CHECK(to_cycle_string(p) == "(1,3)(2,4)");
  CHECK(cycle_decomposition(Permutation(4)).cycles == std::vector<Cycle>{{1}, {2}, {3}, {4}});
  CHECK(cycle_decomposition(Permutation::from_images({3, 2, 1})).cycles == std::vector<Cycle>{{1, 3}, {2}});
  CHECK(to_string(cycle_decomposition(Permutation::from_images({3, 2, 1}))) == "(1,3)(2)");
  for (const auto& q : test::every_permutation(5)) {
    const auto d = cycle_decomposition(q);
    REQUIRE(Permutation::from_cycles(5, d.cycles) == q);
    for (std::size_t k = 0; k < d.cycles.size(); ++k) {
      REQUIRE(d.cycles[k].front() == *std::min_element(d.cycles[k].begin(), d.cycles[k].end()));
      if (k) REQUIRE(d.cycles[k - 1].front() < d.cycles[k].front());
    }
    REQUIRE(parse_permutation(to_cycle_string(q), 5) == q);
    REQUIRE(parse_permutation(to_one_line_string(q)) == q);
  }
}

TEST_CASE("conjugation relabels points and keeps the cycle type") {
  const auto p = cyc(3, {{1, 2}});
  CHECK(conjugate(p, Permutation(3)) == p);
  CHECK(conjugate(p, cyc(3, {{2, 3}})) == cyc(3, {{1, 3}}));
  const auto s5 = test::every_permutation(5);
  for (const auto& g : s5)
    for (const auto& by : s5) {
      const auto c = conjugate(g, by);
      REQUIRE(cycle_type(c) == cycle_type(g));
      REQUIRE(classify(c) == classify(g));
      REQUIRE(c == compose(compose(by, g), inverse(by)));
    }
}

TEST_CASE("classification into special and non-special") {
  CHECK(classify(cyc(4, {{1, 2}, {3, 4}})) == PermutationClass::Involution);
  CHECK(classify(cyc(6, {{2, 3, 4}, {1, 5}})) == PermutationClass::SpecialWithThreeCycle);
  CHECK(classify(cyc(6, {{1, 2, 3}, {4, 5, 6}})) == PermutationClass::NonSpecial);
  CHECK(classify(cyc(4, {{1, 2, 3, 4}})) == PermutationClass::NonSpecial);
  CHECK(classify(Permutation(3)) == PermutationClass::Involution);
  CHECK(sign(cyc(3, {{1, 2, 3}})) == 1);
  CHECK(sign(cyc(3, {{1, 2}})) == -1);
}

TEST_CASE("RSK tableaux") {
  const auto id = rsk(Permutation(5));
  CHECK(id.p_tableau == Tableau{{1, 2, 3, 4, 5}});
  CHECK(id.q_tableau == Tableau{{1, 2, 3, 4, 5}});
  CHECK(rsk(Permutation::from_images({3, 2, 1})).height() == 3);

  std::size_t fixed_points = 0;
  for (const auto& p : test::every_permutation(6)) {
    const auto t = rsk(p);
    REQUIRE(standard(t.p_tableau));
    REQUIRE(standard(t.q_tableau));
    REQUIRE(t.shape() == rsk(inverse(p)).shape());
    const auto ti = rsk(inverse(p));
    REQUIRE(ti.p_tableau == t.q_tableau);
    REQUIRE(ti.q_tableau == t.p_tableau);
    REQUIRE(t.height() == brute_lds(p));
    REQUIRE((t.p_tableau == t.q_tableau) == is_involution(p));
    if (t.p_tableau == t.q_tableau) ++fixed_points;
  }
  CHECK(fixed_points == involution_count(6).get_ui());
  for (int n = 1; n <= 7; ++n) {
    std::size_t count = 0;
    for (const auto& p : all_permutations(n)) {
      const auto t = rsk(p);
      if (t.p_tableau == t.q_tableau) ++count;
    }
    CHECK(count == involution_count(n).get_ui());
  }
}

TEST_CASE("goodness") {
  CHECK(is_good(Permutation::from_images({3, 4, 1, 2}), 2));
  CHECK_FALSE(is_good(Permutation::from_images({3, 2, 1}), 2));
  CHECK(is_good(Permutation::from_images({3, 2, 1}), 3));
  for (const auto& p : test::every_permutation(6)) REQUIRE(is_good(p, 2) == is_good(inverse(p), 2));
  for (int n = 1; n <= 8; ++n) {
    const auto perms = all_permutations(n);
    const auto good =
        std::count_if(perms.begin(), perms.end(), [](const Permutation& p) { return is_good(p, 2); });
    CHECK(static_cast<unsigned long>(good) == catalan(n).get_ui());
  }
  // last 3-good permutation of S_n is n,1,2,...,n-1
  for (int n = 3; n <= 7; ++n) {
    std::vector<int> img{n};
    for (int k = 1; k < n; ++k) img.push_back(k);
    CHECK(good_permutations(n, 2).back() == Permutation::from_images(img));
  }
}

TEST_CASE("decreasing triples") {
  std::array<int, 3> pos{};
  CHECK_FALSE(find_decreasing_triple(Permutation::from_images({3, 4, 1, 2}), pos));
  REQUIRE(find_decreasing_triple(Permutation::from_images({2, 4, 3, 1}), pos));
  CHECK(pos == std::array<int, 3>{2, 3, 4});
  for (const auto& p : test::every_permutation(6)) REQUIRE(find_decreasing_triple(p, pos) == !is_good(p, 2));
}

TEST_CASE("counting sequences") {
  const std::vector<unsigned long> cat{1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  const std::vector<unsigned long> inv{1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496};
  const std::vector<unsigned long> sym{1, 2, 4, 10, 26, 76, 232, 750, 2494, 8524};
  for (int n = 1; n <= 10; ++n) {
    CHECK(catalan(n).get_ui() == cat[n - 1]);
    CHECK(involution_count(n).get_ui() == inv[n - 1]);
    CHECK(symmetric_dim(n) == sym[n - 1]);
  }
  for (int n = 1; n <= 7; ++n) CHECK(symmetric_dim(n) == involution_count(n).get_ui());
  CHECK(symmetric_dim(8) < involution_count(8).get_ui());
  for (int n = 1; n <= 8; ++n) CHECK(involutions(n).size() == involution_count(n).get_ui());
  CHECK_THROWS_AS(catalan(0), Error);
  CHECK_THROWS_AS(involution_count(0), Error);
  CHECK_THROWS_AS(symmetric_dim(0), Error);
}

TEST_CASE("permutation text") {
  CHECK(parse_permutation("(1,2,3)(4,5)") == cyc(5, {{1, 2, 3}, {4, 5}}));
  CHECK(parse_permutation(" ( 1 , 2 ) ", 4) == cyc(4, {{1, 2}}));
  CHECK(parse_permutation("n=6 (1,2)").degree() == 6);
  CHECK(parse_permutation("[3,1,2]") == Permutation::from_images({3, 1, 2}));
  CHECK(parse_permutation("[3,1,2]", 5) == Permutation::from_images({3, 1, 2, 4, 5}));
  CHECK(parse_permutation("id", 3) == Permutation(3));
  CHECK(to_cycle_string(Permutation(3)) == "()");
  CHECK(to_one_line_string(Permutation::from_images({2, 1})) == "[2,1]");
  CHECK_THROWS_AS(parse_permutation("(1,2"), Error);
  CHECK_THROWS_AS(parse_permutation("(1,2)x"), Error);
  CHECK_THROWS_AS(parse_permutation("(1,5)", 3), Error);
  CHECK_THROWS_AS(parse_permutation("[1,1]"), Error);
  CHECK_THROWS_AS(parse_permutation("(0,1)"), Error);
}

TEST_CASE("hashing distinguishes S6") {
  std::set<std::size_t> hashes;
  for (const auto& p : test::every_permutation(6)) hashes.insert(std::hash<Permutation>{}(p));
  CHECK(hashes.size() > 700);
}
