#include <doctest.h>

#include <set>
#include <thread>

#include "support.hpp"
#include "swapalg/error.hpp"
#include "swapalg/families.hpp"
#include "swapalg/formulas.hpp"
#include "swapalg/oracle.hpp"
#include "swapalg/rewrite.hpp"

using namespace swapalg;

namespace {

AlgebraElement el(const char* text, int degree = 0) { return parse_element(text, degree); }
Permutation perm(const char* text, int degree = 0) { return parse_permutation(text, degree); }
Term term(const char* text, int degree = 0, Rational c = 1) { return Term{perm(text, degree), c}; }

bool dyadic(const AlgebraElement& x) {
  for (const auto& [g, c] : x.terms())
    if (mpz_popcount(c.get_den().get_mpz_t()) != 1) return false;
  return true;
}

bool integral_good(const AlgebraElement& x) {
  for (const auto& [g, c] : x.terms())
    if (c.get_den() != 1 || !is_good(g, 2)) return false;
  return true;
}

bool increasing_threes(const AlgebraElement& x) {
  for (const auto& [g, c] : x.terms())
    for (const auto& cyc : cycle_decomposition(g).cycles)
      if (cyc.size() == 3 && cyc[1] > cyc[2]) return false;
  return true;
}

int max_cycle(const AlgebraElement& x) {
  int m = 0;
  for (const auto& [g, c] : x.terms()) m = std::max(m, longest_cycle(g));
  return m;
}

}  // namespace

TEST_CASE("normalize_3cycle") {
  const auto r = normalize_3cycle(term("(1,3,2)"), {1, 3, 2});
  CHECK(r.replacement == el("-(1,2,3)+(1,2)+(1,3)+(2,3)-1"));
  CHECK(r.rule.name == RuleName::Normalize3Cycle);
  const auto r2 = normalize_3cycle(term("(1,3,2)(4,5)"), {3, 2, 1});
  CHECK(r2.replacement == el("-(1,2,3)+(1,2)+(1,3)+(2,3)-1", 5) * el("(4,5)", 5));
  CHECK(equal_in_sigma(AlgebraElement(perm("(1,3,2)(4,5)")), r2.replacement));
  CHECK_THROWS_AS(normalize_3cycle(term("(1,2,3)"), {1, 2, 3}), Error);
  CHECK_THROWS_AS(normalize_3cycle(term("(1,3,2,4)"), {1, 3, 2, 4}), Error);
  CHECK_THROWS_AS(normalize_3cycle(term("(1,3,2)"), {1, 2, 3}), Error);
}

TEST_CASE("expand_4cycle") {
  const auto r = expand_4cycle(term("(1,2,3,4)", 0, 2), {1, 2, 3, 4});
  CHECK(r.replacement == formulas::four_cycle().rhs);
  const auto r2 = expand_4cycle(term("(2,3,4,5)", 0, 2), {2, 3, 4, 5});
  CHECK(r2.replacement == formulas::instantiate(formulas::four_cycle_rule(), {2, 3, 4, 5}, 5));
  CHECK(equal_in_sigma(el("2*(2,3,4,5)"), r2.replacement));
  CHECK(max_cycle(r2.replacement) <= 3);
  CHECK_THROWS_AS(expand_4cycle(term("(1,2,3)"), {1, 2, 3}), Error);
}

TEST_CASE("splice_long_cycle") {
  const auto r5 = splice_long_cycle(term("(1,2,3,4,5)", 0, 2), {1, 2, 3, 4, 5});
  CHECK(r5.replacement == formulas::five_cycle_splice().rhs);
  const auto r6 = splice_long_cycle(term("(1,2,3,4,5,6)", 0, 2), {1, 2, 3, 4, 5, 6});
  CHECK(r6.replacement == formulas::six_cycle_splice().rhs);
  CHECK(r6.replacement.coefficient(perm("(3,4,2)(1,5,6)")) == 1);
  CHECK(r6.rule.letter_map.size() == 6);
  CHECK_THROWS_AS(splice_long_cycle(term("(1,2,3,4)"), {1, 2, 3, 4}), Error);
  // every rotation of every long cycle in S5 and S6 shrinks cycles
  for (int n = 5; n <= 6; ++n)
    for (const auto& p : all_permutations(n)) {
      for (const auto& c : cycle_decomposition(p).cycles) {
        if (c.size() < 5) continue;
        for (std::size_t s = 0; s < c.size(); ++s) {
          Cycle rot(c.begin() + s, c.end());
          rot.insert(rot.end(), c.begin(), c.begin() + s);
          const auto r = splice_long_cycle(Term{p, Rational(3, 2)}, rot);
          REQUIRE(max_cycle(r.replacement) < static_cast<int>(c.size()));
          REQUIRE(equal_in_sigma(AlgebraElement(p, Rational(3, 2)), r.replacement));
        }
      }
    }
}

TEST_CASE("eliminate_33_pair") {
  const auto r = eliminate_33_pair(term("(4,3,2)(5,6,1)", 0, 8), {4, 3, 2}, {5, 6, 1});
  CHECK(r.replacement == formulas::three_three_example().rhs);
  const auto swapped = eliminate_33_pair(term("(4,3,2)(5,6,1)", 0, 8), {1, 5, 6}, {2, 4, 3});
  CHECK(swapped.replacement == r.replacement);
  CHECK(std::vector<std::pair<std::string, int>>(r.rule.letter_map) ==
        std::vector<std::pair<std::string, int>>{{"a", 1}, {"b", 2}, {"c", 3}, {"d", 4}, {"e", 5}, {"f", 6}});

  // every pair of 3-cycles on complementary triples of S6, in both orientations
  std::size_t pairs = 0;
  for (const auto& p : all_permutations(6)) {
    if (cycle_type(p) != std::vector<int>{3, 3}) continue;
    const auto cs = cycle_decomposition(p).cycles;
    const auto rep = eliminate_33_pair(Term{p, 1}, cs[0], cs[1]).replacement;
    REQUIRE(test::is_special_support(rep));
    REQUIRE(equal_in_sigma(AlgebraElement(p), rep));
    ++pairs;
  }
  CHECK(pairs == 40);
  // extra transpositions ride along
  const auto big = eliminate_33_pair(term("(1,2,3)(4,5,6)(7,8)"), {1, 2, 3}, {4, 5, 6});
  CHECK(test::is_special_support(big.replacement));
  CHECK(equal_in_sigma(el("(1,2,3)(4,5,6)(7,8)"), big.replacement));
  CHECK_THROWS_AS(eliminate_33_pair(term("(1,2,3)(4,5,6,7)"), {1, 2, 3}, {4, 5, 6, 7}), Error);
  CHECK_THROWS_AS(eliminate_33_pair(term("(1,2,3)(4,5,6)(7,8,9,10)"), {1, 2, 3}, {4, 5, 6}), Error);
  CHECK_THROWS_AS(eliminate_33_pair(term("(1,2,3)(4,5,6)"), {1, 2, 3}, {1, 2, 3}), Error);
}

TEST_CASE("every rule application is sound on S3..S6") {
  for (int n = 3; n <= 6; ++n)
    for (const auto& p : all_permutations(n)) {
      const Term t{p, Rational(-5, 3)};
      const AlgebraElement x(p, t.coefficient);
      std::vector<Cycle> threes;
      for (const auto& c : cycle_decomposition(p).cycles) {
        if (c.size() == 3) {
          threes.push_back(c);
          if (c[1] > c[2]) REQUIRE(equal_in_sigma(x, normalize_3cycle(t, c).replacement));
        }
        if (c.size() == 4) REQUIRE(equal_in_sigma(x, expand_4cycle(t, c).replacement));
        if (c.size() >= 5) REQUIRE(equal_in_sigma(x, splice_long_cycle(t, c).replacement));
      }
      if (threes.size() == 2) REQUIRE(equal_in_sigma(x, eliminate_33_pair(t, threes[0], threes[1]).replacement));
      std::array<int, 3> pos{};
      if (find_decreasing_triple(p, pos)) REQUIRE(equal_in_sigma(x, straighten_triple(t, pos).replacement));
    }
}

TEST_CASE("specialize") {
  SUBCASE("already special input is untouched") {
    const auto x = el("(1,2)(3,4) - 1/3*(1,5,6)");
    const auto [y, trace] = specialize(x);
    CHECK(y == x);
    CHECK(trace.steps.empty());
  }
  SUBCASE("zero") {
    const auto [y, trace] = specialize(AlgebraElement(5));
    CHECK(y.is_zero());
    CHECK(trace.steps.empty());
  }
  SUBCASE("four-cycle") {
    const auto [y, trace] = specialize(el("(1,2,3,4)"));
    CHECK(y == formulas::four_cycle().rhs * Rational(1, 2));
    CHECK(trace.steps.size() == 1);
  }
  SUBCASE("five-cycle") {
    const auto [y, trace] = specialize(el("(1,2,3,4,5)"));
    CHECK(test::is_special_support(y));
    CHECK(equal_in_sigma(y, formulas::five_cycle_expanded().rhs * Rational(1, 4)));
  }
  SUBCASE("type 3,3") {
    const auto [y, trace] = specialize(el("(1,2,3)(4,5,6)"));
    CHECK(test::is_special_support(y));
    CHECK(equal_in_sigma(y, el("(1,2,3)(4,5,6)")));
  }
  SUBCASE("normalized leftovers") {
    const auto [y, trace] = specialize(el("(1,3,2) + (1,2,3,4,5,6)"), true);
    CHECK(test::is_special_support(y));
    CHECK(increasing_threes(y));
    CHECK(equal_in_sigma(y, el("(1,3,2) + (1,2,3,4,5,6)")));
  }
  SUBCASE("exhaustive on S3..S6") {
    for (int n = 3; n <= 6; ++n)
      for (const auto& p : all_permutations(n)) {
        const auto [y, trace] = specialize(AlgebraElement(p), n == 5);
        REQUIRE(test::is_special_support(y));
        REQUIRE(dyadic(y));
        REQUIRE(trace.replay() == y);
        REQUIRE(trace.output == y);
        REQUIRE(equal_in_sigma(y, AlgebraElement(p)));
        if (n == 5) REQUIRE(increasing_threes(y));
      }
  }
  SUBCASE("random elements of S7 and S8") {
    for (int k = 0; k < 10; ++k) {
      const int n = 7 + k % 2;
      const auto x = test::random_element(n, 3);
      SpecializeOptions o;
      o.record_trace = false;
      const auto [y, trace] = specialize(x, o);
      REQUIRE(trace.steps.empty());
      REQUIRE(test::is_special_support(y));
      REQUIRE(equal_as_operators(x, y));
    }
  }
  SUBCASE("every step is sound") {
    const auto [y, trace] = specialize(el("(1,2,3,4,5,6,7) - 2*(1,3)(2,4,5,6)"), true);
    CHECK(trace.first_unsound_step() == trace.steps.size());
    for (const auto& s : trace.steps) {
      std::set<int> pts;
      for (const auto& [letter, point] : s.rule.letter_map) pts.insert(point);
      CHECK(pts.size() == s.rule.letter_map.size());
    }
  }
  SUBCASE("a corrupted step is caught") {
    auto [y, trace] = specialize(el("(1,2,3,4)"));
    REQUIRE(!trace.steps.empty());
    trace.steps[0].after += el("(1,2)", 4);
    CHECK(trace.first_unsound_step() == 0);
  }
}

TEST_CASE("symmetric_to_involutions") {
  CHECK(symmetric_to_involutions(el("(1,2)")) == el("(1,2)"));
  CHECK(symmetric_to_involutions(el("(1,2,3)+(1,3,2)")) == el("(1,2)+(1,3)+(2,3)-1"));
  CHECK_THROWS_AS(symmetric_to_involutions(el("(1,2,3)")), Error);
  for (int k = 0; k < 30; ++k) {
    const int n = 4 + k % 3;
    const auto a = test::random_element(n, 4);
    const auto x = a + adjoint(a);
    const auto y = symmetric_to_involutions(x);
    for (const auto& [g, c] : y.terms()) REQUIRE(is_involution(g));
    REQUIRE(equal_in_sigma(x, y));
  }
}

TEST_CASE("straightening") {
  SUBCASE("identity") {
    const auto [y, trace] = straighten_3good(Permutation(4));
    CHECK(y == AlgebraElement::identity(4));
    CHECK(trace.steps.empty());
  }
  SUBCASE("321") {
    const auto p = Permutation::from_images({3, 2, 1});
    const auto r = straighten_triple(Term{p, 1}, {1, 2, 3});
    CHECK(r.replacement.size() == 5);
    for (const auto& [g, c] : r.replacement.terms()) {
      CHECK(g < p);
      CHECK(abs(c) == 1);
    }
    const auto [y, trace] = straighten_3good(p);
    CHECK(integral_good(y));
    CHECK(equal_in_sigma(y, el("(1,3)")));
    CHECK_THROWS_AS(straighten_triple(Term{p, 1}, {1, 3, 2}), Error);
    CHECK_THROWS_AS(straighten_triple(Term{Permutation(3), 1}, {1, 2, 3}), Error);
  }
  SUBCASE("exhaustive on S1..S6") {
    for (int n = 1; n <= 6; ++n) {
      std::set<Permutation> support;
      for (const auto& p : all_permutations(n)) {
        const auto [y, trace] = straighten_3good(p);
        REQUIRE(integral_good(y));
        REQUIRE(trace.replay() == y);
        if (n <= 5) REQUIRE(equal_in_sigma(y, AlgebraElement(p)));
        REQUIRE(shared_straightening_cache().expand_element(p) == y);
        for (const auto& [g, c] : y.terms()) support.insert(g);
      }
      CHECK(support.size() <= catalan(n).get_ui());
    }
  }
  SUBCASE("elements") {
    const auto x = el("1/2*(1,4)(2,3) - (1,2,3,4)");
    const auto [y, trace] = straighten_3good(x);
    CHECK(equal_in_sigma(x, y));
    for (const auto& [g, c] : y.terms()) CHECK(is_good(g, 2));
    CHECK(trace.first_unsound_step() == trace.steps.size());
  }
}

TEST_CASE("straightening cache under concurrency") {
  StraighteningCache cache;
  const auto perms = all_permutations(7);
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w)
    workers.emplace_back([&, w] {
      for (std::size_t k = w; k < perms.size(); k += 3) cache.expand(perms[k]);
    });
  for (auto& t : workers) t.join();
  CHECK(cache.size() == perms.size());
  for (int k = 0; k < 40; ++k) {
    const auto p = test::random_permutation(7);
    REQUIRE(cache.expand_element(p) == straighten_3good(p).first);
  }
  cache.clear();
  CHECK(cache.size() == 0);
}

TEST_CASE("both normal forms agree as operators") {
  for (const auto& p : all_permutations(5)) {
    const AlgebraElement x(p);
    const auto s = specialize(x).first;
    const auto t = straighten_3good(p).first;
    REQUIRE(equal_in_sigma(s, t));
  }
}
