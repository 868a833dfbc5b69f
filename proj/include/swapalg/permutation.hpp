#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace swapalg {

/// Largest degree a Permutation can hold. Images are stored inline so that
/// permutations are trivially copyable and cheap to hash and compare.
inline constexpr int kMaxDegree = 32;

using Cycle = std::vector<int>;

/// Element of S_n stored in one-line form: images()[k-1] is the image of k.
///
/// Composition is right-to-left: `compose(p, q)` applies q first, then p.
/// Under this convention (1,2,3)(1,5,4,6) = (1,5,4,6,2,3).
class Permutation {
public:
  /// Identity of degree n.
  explicit Permutation(int n = 1);

  /// From a one-line form; throws Error(parse) unless it is a bijection of {1..n}.
  static Permutation from_images(std::span<const int> images);
  static Permutation from_images(std::initializer_list<int> images);

  /// From disjoint cycles over {1..n}. Points not mentioned are fixed.
  static Permutation from_cycles(int n, const std::vector<Cycle>& cycles);

  int degree() const noexcept { return n_; }
  int operator()(int point) const { return image_[point - 1]; }
  std::vector<int> images() const;

  bool is_identity() const noexcept;

  /// Same permutation with fixed points appended up to degree m >= degree().
  Permutation extended(int m) const;

  friend bool operator==(const Permutation& a, const Permutation& b) noexcept {
    return a.n_ == b.n_ && a.image_ == b.image_;
  }
  /// Degree first, then lexicographic on the one-line form.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) noexcept {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.image_ <=> b.image_;
  }

  std::size_t hash() const noexcept;

private:
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation conjugate(const Permutation&, const Permutation&);

  std::uint8_t n_ = 1;
  std::array<std::uint8_t, kMaxDegree> image_{};
};

/// Disjoint cycles including fixed points. Each cycle starts at its minimum
/// and cycles are sorted by minimum.
struct CycleDecomposition {
  int degree = 0;
  std::vector<Cycle> cycles;

  /// Cycle lengths in the order of `cycles`.
  std::vector<int> lengths() const;
  std::size_t count() const { return cycles.size(); }
};

enum class PermutationClass { Involution, SpecialWithThreeCycle, NonSpecial };

using Tableau = std::vector<std::vector<int>>;

struct TableauPair {
  Tableau p_tableau;  ///< insertion tableau
  Tableau q_tableau;  ///< recording tableau

  std::vector<int> shape() const;
  int height() const { return static_cast<int>(p_tableau.size()); }
};

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// by * p * by^-1.
Permutation conjugate(const Permutation& p, const Permutation& by);

CycleDecomposition cycle_decomposition(const Permutation& p);
/// Number of cycles, fixed points included.
int cycle_count(const Permutation& p);
/// Length of the longest cycle.
int longest_cycle(const Permutation& p);
/// Sorted (descending) cycle lengths.
std::vector<int> cycle_type(const Permutation& p);

PermutationClass classify(const Permutation& p);
inline bool is_special(const Permutation& p) { return classify(p) != PermutationClass::NonSpecial; }
inline bool is_involution(const Permutation& p) { return classify(p) == PermutationClass::Involution; }
int sign(const Permutation& p);

/// Row-insertion Robinson-Schensted.
TableauPair rsk(const Permutation& p);
int longest_decreasing_subsequence(const Permutation& p);

/// True iff the one-line form has no decreasing subsequence of length d+1.
/// Both the patience-sorting length and the RSK shape height are computed;
/// disagreement raises Error(internal).
bool is_good(const Permutation& p, int d);

/// Leftmost decreasing triple of positions i<j<k (1-based) in
/// lexicographic order of (i,j,k), if any.
bool find_decreasing_triple(const Permutation& p, std::array<int, 3>& positions);

mpz_class catalan(int n);
mpz_class involution_count(int n);
/// Dimension of the real symmetric part of the swap algebra. Tabulated for
/// n <= 10; larger n is computed as the Gram rank of the involutions.
std::uint64_t symmetric_dim(int n);

std::string to_cycle_string(const Permutation& p);
std::string to_one_line_string(const Permutation& p);
std::string to_string(const CycleDecomposition& c);
std::string to_string(PermutationClass c);

/// Parses "(1,2,3)(4,5)" or "[3,1,2]". `degree` = 0 infers the degree from
/// the largest point mentioned (or from the one-line length); a positive
/// degree embeds into S_degree. A leading "n=6" sets the degree explicitly.
Permutation parse_permutation(std::string_view text, int degree = 0);

}  // namespace swapalg

template <>
struct std::hash<swapalg::Permutation> {
  std::size_t operator()(const swapalg::Permutation& p) const noexcept { return p.hash(); }
};
