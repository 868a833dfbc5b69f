#include <doctest.h>

#include "support.hpp"
#include "swapalg/error.hpp"
#include "swapalg/formulas.hpp"
#include "swapalg/oracle.hpp"

using namespace swapalg;

TEST_CASE("worked identities hold as operators") {
  for (const auto& id : formulas::golden_identities()) {
    INFO(id.name);
    CHECK(id.lhs.degree() == id.rhs.degree());
    CHECK(equal_in_sigma(id.lhs, id.rhs));
    CHECK(test::reference_matrix(id.lhs) == test::reference_matrix(id.rhs));
  }
}

TEST_CASE("the splice example is a product identity") {
  const auto id = formulas::cycle_splice_example();
  CHECK(id.lhs == id.rhs);
}

TEST_CASE("rule templates") {
  const auto& four = formulas::four_cycle_rule();
  CHECK(four.degree() == 4);
  CHECK(four.size() == 10);
  CHECK(equal_in_sigma(four, parse_element("2*(1,2,3,4)")));
  const auto& tt = formulas::three_three_rule();
  CHECK(tt.degree() == 6);
  // letters a..f = 1..6: 8(d,c,b)(e,f,a) = 8(4,3,2)(5,6,1)
  CHECK(equal_in_sigma(tt, parse_element("8*(4,3,2)(5,6,1)")));
  CHECK(tt == formulas::three_three_example().rhs);
  for (const auto& [g, c] : tt.terms()) CHECK(is_special(g));
}

TEST_CASE("instantiate relabels letters") {
  const auto x = parse_element("(1,2,3) - 1/2*(2,4)");
  CHECK(formulas::instantiate(x, {5, 3, 1, 2}, 6) == parse_element("(5,3,1) - 1/2*(3,2)", 6));
  CHECK_THROWS_AS(formulas::instantiate(x, {1, 1, 2, 3}, 4), Error);
  CHECK_THROWS_AS(formulas::instantiate(x, {1, 2, 3}, 4), Error);
  CHECK_THROWS_AS(formulas::instantiate(x, {1, 2, 3, 7}, 6), Error);
  // conjugation invariance
  for (int k = 0; k < 20; ++k) {
    const auto by = test::random_permutation(6);
    std::vector<int> pts(6);
    for (int j = 1; j <= 6; ++j) pts[j - 1] = by(j);
    const auto id = formulas::three_three_example();
    REQUIRE(equal_in_sigma(formulas::instantiate(id.lhs, pts, 6), formulas::instantiate(id.rhs, pts, 6)));
  }
}
