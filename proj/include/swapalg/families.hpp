#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "swapalg/algebra.hpp"
#include "swapalg/permutation.hpp"

namespace swapalg {

/// All of S_n in lexicographic order of the one-line form.
std::vector<Permutation> all_permutations(int n);
std::vector<Permutation> involutions(int n);
std::vector<Permutation> special_permutations(int n);
/// Permutations with no decreasing subsequence of length d+1.
std::vector<Permutation> good_permutations(int n, int d);
/// The identity followed by the transpositions (i,j), i<j, in lexicographic order.
std::vector<Permutation> transpositions_plus_identity(int n);
/// (a - a^-1) b for a an increasing 3-cycle and b an involution fixing the
/// points of a.
std::vector<AlgebraElement> antisymmetric_specials(int n);

enum class Family { All, Involutions, Specials, ThreeGood, TranspositionsPlusIdentity };

Family parse_family(std::string_view name);
std::string to_string(Family family);
std::vector<Permutation> family_members(Family family, int n);

}  // namespace swapalg
