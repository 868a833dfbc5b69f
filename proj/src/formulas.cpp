#include "swapalg/formulas.hpp"

#include <string>

#include "swapalg/error.hpp"

namespace swapalg::formulas {

namespace {

constexpr const char* kFourCycleRule =
    "(a,d)(b,c)+(a,b)(c,d)-(a,c)(d,b)-(a,d,b)+(a,c,d)+(b,c,d)+(a,b,c)+(b,d)-(c,d)-(b,c)";

constexpr const char* kThreeThreeRule = R"(
(a,b)-2(a,c)+(a,e)+4(a,f)-3(b,c)+2(a,e)(b,c)-2(a,f)(b,c)-3(b,d)+2(a,e)(b,d)-2(a,f)(b,d)+7(b,e)
-2(a,c)(b,e)-4(a,d)(b,e)-6(a,f)(b,e)-2(b,f)-2(a,c)(b,f)+4(a,d)(b,f)+2(a,e)(b,f)+(c,d)
-2(a,e)(c,d)-2(a,f)(c,d)-4(b,e)(c,d)-4(c,e)+4(a,d)(c,e)+4(b,d)(c,e)+4(b,f)(c,e)-4(a,d)(b,f)(c,e)
-4(c,f)+4(a,b)(c,f)-4(a,d)(c,f)-4(b,e)(c,f)+4(a,d)(b,e)(c,f)-2(d,e)+2(a,b)(d,e)+2(a,c)(d,e)
+4(b,c)(d,e)+4(a,c)(b,f)(d,e)+4(c,f)(d,e)-4(a,b)(c,f)(d,e)-2(a,b)(d,f)+2(a,c)(d,f)
-4(a,c)(b,e)(d,f)+4(a,b)(c,e)(d,f)+6(e,f)-4(a,b)(e,f)-4(d,e)(a,b,c)+4(e,f)(a,b,c)+(a,b,e)
-4(c,f)(a,b,e)-2(a,b,f)+4(d,e)(a,b,f)+2(a,c,f)+4(b,e)(a,c,f)-4(d,e)(a,c,f)-4(c,e)(a,d,b)
+4(e,f)(a,d,b)+4(b,e)(a,d,c)-4(e,f)(a,d,c)-4(b,f)(a,d,e)+4(c,f)(a,d,e)-(a,e,b)-4(a,e,f)
+8(c,d)(a,e,f)+2(a,f,c)-2(a,f,e)+(b,c,e)+2(b,c,f)-4(d,e)(b,c,f)+4(a,f)(b,d,c)-(b,d,e)
+4(a,f)(b,d,e)-(b,e,c)+4(a,f)(b,e,c)+(b,e,d)-2(b,e,f)+2(a,d)(b,e,f)+2(b,f,d)-4(c,e)(b,f,d)
-2(a,d)(b,f,e)+(c,d,e)-4(a,f)(c,d,e)+2(c,d,f)-(c,e,d)+2(a,b)(c,e,f)-2(a,d)(c,e,f)+4(b,e)(c,f,d)
-2(a,b)(c,f,e)+2(a,d)(c,f,e)-2(d,e,f)-2(d,f,e)
)";

constexpr const char* kThreeThreeExample = R"(
(1,2)-2(1,3)+(1,5)+4(1,6)-3(2,3)+2(1,5)(2,3)-2(1,6)(2,3)-3(2,4)+2(1,5)(2,4)-2(1,6)(2,4)+7(2,5)
-2(1,3)(2,5)-4(1,4)(2,5)-6(1,6)(2,5)-2(2,6)-2(1,3)(2,6)+4(1,4)(2,6)+2(1,5)(2,6)+(3,4)
-2(1,5)(3,4)-2(1,6)(3,4)-4(2,5)(3,4)-4(3,5)+4(1,4)(3,5)+4(2,4)(3,5)+4(2,6)(3,5)-4(1,4)(2,6)(3,5)
-4(3,6)+4(1,2)(3,6)-4(1,4)(3,6)-4(2,5)(3,6)+4(1,4)(2,5)(3,6)-2(4,5)+2(1,2)(4,5)+2(1,3)(4,5)
+4(2,3)(4,5)+4(1,3)(2,6)(4,5)+4(3,6)(4,5)-4(1,2)(3,6)(4,5)-2(1,2)(4,6)+2(1,3)(4,6)
-4(1,3)(2,5)(4,6)+4(1,2)(3,5)(4,6)+6(5,6)-4(1,2)(5,6)-4(4,5)(1,2,3)+4(5,6)(1,2,3)+(1,2,5)
-4(3,6)(1,2,5)-2(1,2,6)+4(4,5)(1,2,6)+2(1,3,6)+4(2,5)(1,3,6)-4(4,5)(1,3,6)-4(3,5)(1,4,2)
+4(5,6)(1,4,2)+4(2,5)(1,4,3)-4(5,6)(1,4,3)-4(2,6)(1,4,5)+4(3,6)(1,4,5)-(1,5,2)-4(1,5,6)
+8(3,4)(1,5,6)+2(1,6,3)-2(1,6,5)+(2,3,5)+2(2,3,6)-4(4,5)(2,3,6)+4(1,6)(2,4,3)-(2,4,5)
+4(1,6)(2,4,5)-(2,5,3)+4(1,6)(2,5,3)+(2,5,4)-2(2,5,6)+2(1,4)(2,5,6)+2(2,6,4)-4(3,5)(2,6,4)
-2(1,4)(2,6,5)+(3,4,5)-4(1,6)(3,4,5)+2(3,4,6)-(3,5,4)+2(1,2)(3,5,6)-2(1,4)(3,5,6)+4(2,5)(3,6,4)
-2(1,2)(3,6,5)+2(1,4)(3,6,5)-2(4,5,6)-2(4,6,5)
)";

constexpr const char* kSixCycleExpanded = R"(
5-2(1,2)-3(1,3)+(1,6)+(2,3)-2(1,4)(2,3)-3(1,6)(2,3)-3(2,4)+2(1,3)(2,4)-(1,3)(2,6)-(1,4)(2,6)
+(3,4)-2(1,2)(3,4)-3(1,6)(3,4)-2(2,5)(3,4)+2(1,6)(2,5)(3,4)-2(1,5)(2,6)(3,4)-2(3,5)+2(2,4)(3,5)
-2(1,6)(2,4)(3,5)-(3,6)+(1,2)(3,6)-(1,4)(3,6)-2(1,5)(3,6)+2(1,5)(2,4)(3,6)+(1,6)(4,2)
-4(1,6)(4,5)-2(2,3)(4,5)+2(1,6)(2,3)(4,5)-2(4,6)+(1,2)(4,6)+(1,3)(4,6)-2(1,5)(2,3)(4,6)-2(5,6)
+2(1,3)(5,6)-2(2,3)(5,6)+2(1,4)(2,3)(5,6)+2(2,4)(5,6)-2(1,3)(2,4)(5,6)-2(3,4)(5,6)
+2(1,2)(3,4)(5,6)+(1,2,3)+(1,2,4)+2(3,4)(1,2,5)-2(1,2,6)+2(3,4)(1,2,6)+2(3,5)(1,2,6)
+2(4,5)(1,2,6)+(1,3,4)+2(1,3,5)-2(2,4)(1,3,5)+2(1,3,6)-2(2,4)(1,3,6)-2(2,5)(1,3,6)+2(4,5)(1,3,6)
+2(2,3)(1,4,5)+2(1,4,6)+2(2,3)(1,4,6)-2(2,5)(1,4,6)-2(3,5)(1,4,6)+2(1,6)(2,3,5)+(2,3,6)
+2(1,6)(2,4,5)+(2,4,6)+2(3,4)(2,5,6)+2(1,6)(3,4,5)+(3,4,6)+2(3,5,6)-2(2,4)(3,5,6)+2(2,3)(4,5,6)
+4(1,5,6)(2,3,4)
)";

constexpr const char* kFiveCycleExpanded = R"(
(1,2)(3,5)+(1,2)(4,5)-(1,3)(2,5)+(1,3)(4,5)-(1,4)(2,5)-(1,4)(3,5)+(1,5)(2,4)-(1,5)(3,4)
-(2,3)(1,5)+(2,4,5)+(1,2,4)+(1,3,5)+(3,4,5)+(1,3,4)+(1,3,5)+(2,3,5)+(1,2,3)-(2,3)-2(4,5)-(3,4)
-2(1,2)-(2,4)-(1,3)-(3,5)-(1,5)+3+2(1,4,5)(2,3)+2(1,2,5)(3,4)-2(1,3,5)(4,2)+2(2,3,4)(1,5)
)";

AlgebraElement parse_letters(std::string_view text, int letters) {
  std::string s(text);
  for (char& ch : s)
    if (ch >= 'a' && ch <= 'f') ch = static_cast<char>('1' + (ch - 'a'));
  return parse_element(s, letters);
}

AlgebraElement single(int degree, const std::vector<Cycle>& cycles, long coefficient) {
  return AlgebraElement(Permutation::from_cycles(degree, cycles), Rational(coefficient));
}

}  // namespace

const AlgebraElement& four_cycle_rule() {
  static const AlgebraElement rule = parse_letters(kFourCycleRule, 4);
  return rule;
}

const AlgebraElement& three_three_rule() {
  static const AlgebraElement rule = parse_letters(kThreeThreeRule, 6);
  return rule;
}

AlgebraElement instantiate(const AlgebraElement& pattern, const std::vector<int>& points, int degree) {
  const int k = pattern.degree();
  if (static_cast<int>(points.size()) != k)
    fail(Errc::invalid_argument, "letter map must assign exactly " + std::to_string(k) + " points");
  std::vector<bool> used(degree + 1, false);
  for (int a : points) {
    if (a < 1 || a > degree) fail(Errc::out_of_range, "letter mapped outside 1.." + std::to_string(degree));
    if (used[a]) fail(Errc::invalid_argument, "letter map is not injective");
    used[a] = true;
  }
  AlgebraElement out(degree);
  for (const auto& [g, c] : pattern.terms()) {
    std::vector<int> img(degree);
    for (int x = 1; x <= degree; ++x) img[x - 1] = x;
    for (int j = 1; j <= k; ++j) img[points[j - 1] - 1] = points[g(j) - 1];
    out.add_term(Permutation::from_images(img), c);
  }
  return out;
}

Identity three_cycle_sum() {
  return {"three_cycle_sum", parse_element("(1,2,3)+(1,3,2)", 3), parse_element("(1,2)+(1,3)+(2,3)-1", 3)};
}

Identity three_cycle_normalization() {
  return {"three_cycle_normalization", parse_element("(1,3,2)", 3),
          parse_element("-(1,2,3)+(1,2)+(1,3)+(2,3)-1", 3)};
}

Identity four_cycle() {
  return {"four_cycle", single(4, {{1, 2, 3, 4}}, 2),
          parse_element("(1,4)(2,3)+(1,2)(3,4)-(1,3)(4,2)-(1,4,2)+(1,3,4)+(2,3,4)+(1,2,3)+(2,4)-(3,4)-(2,3)", 4)};
}

Identity four_cycle_normalized() {
  return {"four_cycle_normalized", single(4, {{1, 2, 3, 4}}, 2),
          parse_element("(1,4)(2,3)+(1,2)(3,4)-(1,3)(4,2)+(1,2,4)+(1,3,4)+(2,3,4)+(1,2,3)"
                        "-(1,2)-(1,4)-(3,4)-(2,3)+1",
                        4)};
}

Identity cycle_splice_example() {
  return {"cycle_splice_example", single(6, {{1, 2, 3}}, 1) * single(6, {{1, 5, 4, 6}}, 1),
          single(6, {{1, 5, 4, 6, 2, 3}}, 1)};
}

Identity five_cycle_splice() {
  return {"five_cycle_splice", single(5, {{1, 2, 3, 4, 5}}, 2),
          parse_element("(1,4,5)(2,3)+(1,2,5)(3,4)-(1,3,5)(4,2)-(1,4,2,5)+(1,3,4,5)+(3,4,2)(1,5)"
                        "+(1,2,3,5)+(2,4)(1,5)-(3,4)(1,5)-(2,3)(1,5)",
                        5)};
}

Identity six_cycle_splice() {
  return {"six_cycle_splice", single(6, {{1, 2, 3, 4, 5, 6}}, 2),
          parse_element("(1,4,5,6)(2,3)+(1,2,5,6)(3,4)-(1,3,5,6)(4,2)-(1,4,2,5,6)+(1,3,4,5,6)"
                        "+(3,4,2)(1,5,6)+(1,2,3,5,6)+(2,4)(1,5,6)-(3,4)(1,5,6)-(2,3)(1,5,6)",
                        6)};
}

Identity five_cycle_expanded() {
  return {"five_cycle_expanded", single(5, {{1, 2, 3, 4, 5}}, 4), parse_element(kFiveCycleExpanded, 5)};
}

Identity six_cycle_expanded() {
  return {"six_cycle_expanded", single(6, {{1, 2, 3, 4, 5, 6}}, 8), parse_element(kSixCycleExpanded, 6)};
}

Identity three_three_example() {
  return {"three_three_example", single(6, {{4, 3, 2}, {5, 6, 1}}, 8), parse_element(kThreeThreeExample, 6)};
}

std::vector<Identity> golden_identities() {
  return {three_cycle_sum(),      three_cycle_normalization(), four_cycle(),
          four_cycle_normalized(), cycle_splice_example(),     five_cycle_splice(),
          six_cycle_splice(),     five_cycle_expanded(),       six_cycle_expanded(),
          three_three_example()};
}

}  // namespace swapalg::formulas
