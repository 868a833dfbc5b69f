#pragma once

#include "swapalg/algebra.hpp"

/// Substitution rules and worked identities of the swap algebra, as exact
/// elements. Rule templates live in S_4 / S_6 with letters a,b,c,d,e,f
/// numbered 1..6; `instantiate` relabels them onto concrete points.
namespace swapalg::formulas {

/// Right side of 2(a,b,c,d) = ..., letters a,b,c,d = 1,2,3,4 (degree 4).
const AlgebraElement& four_cycle_rule();
/// Right side of 8(d,c,b)(e,f,a) = ..., letters a..f = 1..6 (degree 6).
const AlgebraElement& three_three_rule();

/// Relabels a template of degree k onto `points` (letter j -> points[j-1])
/// inside S_degree.
AlgebraElement instantiate(const AlgebraElement& pattern, const std::vector<int>& points, int degree);

// Worked identities. Each pair is (left side, right side) and both sides
// are equal as operators on (F^2)^{\otimes n}.
struct Identity {
  std::string name;
  AlgebraElement lhs;
  AlgebraElement rhs;
};

/// (1,2,3)+(1,3,2) = (1,2)+(1,3)+(2,3)-1.
Identity three_cycle_sum();
/// (1,3,2) = -(1,2,3)+(1,2)+(1,3)+(2,3)-1.
Identity three_cycle_normalization();
/// 2(1,2,3,4) = ... with the non-normalized (1,4,2) term.
Identity four_cycle();
/// 2(1,2,3,4) = ... with every 3-cycle increasing.
Identity four_cycle_normalized();
/// (1,2,3)(1,5,4,6) = (1,5,4,6,2,3) as a product in the group algebra.
Identity cycle_splice_example();
/// 2(1,2,3,4,5) = 2(1,5)(1,2,3,4) = ten terms.
Identity five_cycle_splice();
/// 2(1,2,3,4,5,6) = 2(1,5,6)(1,2,3,4) = ten terms.
Identity six_cycle_splice();
/// 4(1,2,3,4,5) fully expanded into special permutations.
Identity five_cycle_expanded();
/// 8(1,2,3,4,5,6) expanded down to one remaining (3,3) term.
Identity six_cycle_expanded();
/// 8(4,3,2)(5,6,1) expanded into special permutations.
Identity three_three_example();

/// All of the above, in the order listed.
std::vector<Identity> golden_identities();

}  // namespace swapalg::formulas
