#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "swapalg/permutation.hpp"

namespace swapalg {

/// Exact rational; GMP keeps it canonical (positive denominator, reduced).
using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/// Finite formal linear combination of permutations of one degree with
/// rational coefficients. Zero coefficients are never stored and terms
/// iterate in lexicographic order of the one-line form.
class AlgebraElement {
public:
  using Terms = std::map<Permutation, Rational>;

  explicit AlgebraElement(int degree = 1);
  /// coefficient * g.
  AlgebraElement(const Permutation& g, Rational coefficient = 1);

  static AlgebraElement identity(int degree) { return AlgebraElement(Permutation(degree)); }

  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Permutation& g) const;

  /// Adds c * g; removes the term when the result is zero.
  void add_term(const Permutation& g, const Rational& c);

  AlgebraElement& operator+=(const AlgebraElement& y);
  AlgebraElement& operator-=(const AlgebraElement& y);
  AlgebraElement& operator*=(const Rational& c);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

private:
  int degree_;
  Terms terms_;
};

AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y);
AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y);
AlgebraElement operator-(AlgebraElement x);
AlgebraElement operator*(AlgebraElement x, const Rational& c);
AlgebraElement operator*(const Rational& c, AlgebraElement x);
/// Group-algebra product: bilinear extension of compose.
AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);

inline AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) { return x + y; }
inline AlgebraElement scale(const AlgebraElement& x, const Rational& c) { return x * c; }
inline AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) { return x * y; }

/// g -> g^-1 on every term.
AlgebraElement adjoint(const AlgebraElement& x);
/// (x + x*)/2
AlgebraElement symmetric_part(const AlgebraElement& x);
/// (x - x*)/2
AlgebraElement antisymmetric_part(const AlgebraElement& x);
bool is_symmetric(const AlgebraElement& x);

/// Signed sum over all permutations of `points` (1-based, distinct), fixing
/// every other point of {1..degree}.
AlgebraElement antisymmetrizer(const std::vector<int>& points, int degree);

/// Partial trace over tensor factor i with dim V = d: deletes i from its
/// cycle (scaling by d when i is fixed) and relabels the surviving points
/// order-preservingly onto {1..n-1}.
AlgebraElement partial_trace_symbolic(const AlgebraElement& x, int i, int d = 2);
/// Term-level partial trace: returns the permutation and whether i was fixed.
Permutation partial_trace_permutation(const Permutation& g, int i, bool& was_fixed);

/// Embeds every term into S_m, m >= degree.
AlgebraElement extended(const AlgebraElement& x, int m);

/// "1/2*(1,2)(3,4) - 1*(1,2,3)"; identity terms print as a bare coefficient.
std::string to_string(const AlgebraElement& x);

/// Accepts signed rational coefficients times cycle-form or one-line
/// permutations, e.g. "1/2*(1,2)(3,4) - (1,2,3) + 3". "*" and U+00B7 are
/// both accepted as multiplication, "-" and U+2212 as minus. A bare
/// coefficient stands for a multiple of the identity. `degree` = 0 infers
/// the degree (largest point mentioned); a leading "n=6" fixes it.
AlgebraElement parse_element(std::string_view text, int degree = 0);

}  // namespace swapalg
