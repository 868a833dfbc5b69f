#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "swapalg/algebra.hpp"
#include "swapalg/permutation.hpp"

namespace swapalg {

/// Largest degree the matrix oracle will build. Defaults to 12 and can be
/// overridden with the SWAPALG_DEGREE_CAP environment variable.
int degree_cap();
void set_degree_cap(int cap);

/// Exact 2^n x 2^n rational matrix on (F^2)^{⊗n}. Basis vector
/// e_{i1}⊗...⊗e_{in} has index sum_k i_k 2^(n-k), so tensor slot 1 is the
/// most significant bit. Stored densely up to degree 8, sparsely above.
class ExactOperator {
public:
  explicit ExactOperator(int n);
  static ExactOperator identity(int n);

  int degree() const noexcept { return n_; }
  std::uint64_t dimension() const noexcept { return std::uint64_t{1} << n_; }

  Rational at(std::uint64_t row, std::uint64_t col) const;
  void add_at(std::uint64_t row, std::uint64_t col, const Rational& value);

  bool is_zero() const;
  Rational trace() const;

  /// Calls f(row, col, value) for every nonzero entry, in row-major order
  /// for dense storage and unspecified order for sparse storage.
  template <class F>
  void for_each_nonzero(F&& f) const {
    if (dense_) {
      const std::uint64_t dim = dimension();
      for (std::uint64_t k = 0; k < dense_entries_.size(); ++k)
        if (sgn(dense_entries_[k]) != 0) f(k / dim, k % dim, dense_entries_[k]);
    } else {
      for (const auto& [key, v] : sparse_entries_) f(key >> 32, key & 0xffffffffu, v);
    }
  }

  ExactOperator& operator+=(const ExactOperator& other);
  ExactOperator& operator-=(const ExactOperator& other);
  ExactOperator& operator*=(const Rational& c);

  friend bool operator==(const ExactOperator& a, const ExactOperator& b);
  friend ExactOperator operator*(const ExactOperator& a, const ExactOperator& b);

  /// One row per line, entries as exact rationals separated by spaces.
  std::string to_dense_text() const;

private:
  int n_;
  bool dense_;
  std::vector<Rational> dense_entries_;
  std::unordered_map<std::uint64_t, Rational> sparse_entries_;
};

ExactOperator operator+(ExactOperator a, const ExactOperator& b);
ExactOperator operator-(ExactOperator a, const ExactOperator& b);

/// Row index of the image of basis vector `col` under g: the content of
/// slot j moves to slot g(j).
std::uint64_t permute_basis_index(const Permutation& g, std::uint64_t col);

/// Linear extension of the tensor-factor action. Homomorphism:
/// operator_of(x*y) = operator_of(x)*operator_of(y).
ExactOperator operator_of(const AlgebraElement& x);
ExactOperator operator_of(const Permutation& g);

/// operator_of(x) == operator_of(y), exactly.
bool equal_in_sigma(const AlgebraElement& x, const AlgebraElement& y);
/// Same predicate through the trace form: <z,z> = 0 for z = x - y, with
/// <g,h> = tr(g h^-1). Needs no 2^n x 2^n matrix, so it also serves above
/// the degree cap.
bool equal_in_sigma_gram(const AlgebraElement& x, const AlgebraElement& y);
/// equal_in_sigma up to the degree cap, equal_in_sigma_gram above it.
bool equal_as_operators(const AlgebraElement& x, const AlgebraElement& y);
/// <x,y> = tr(op(x) op(y)^T), exact.
Rational trace_pairing(const AlgebraElement& x, const AlgebraElement& y);

/// tr(operator_of(p)) = 2^(number of cycles, fixed points included).
std::uint64_t trace_of(const Permutation& p);

struct GramMatrix {
  std::vector<Permutation> basis;
  std::vector<std::uint64_t> entries;  ///< row-major, entry(i,j) = trace_of(g_i g_j^-1)

  std::size_t size() const { return basis.size(); }
  std::uint64_t at(std::size_t i, std::size_t j) const { return entries[i * basis.size() + j]; }
};

GramMatrix gram_matrix(const std::vector<Permutation>& perms);

enum class RankMethod {
  Auto,     ///< Bareiss up to kBareissLimit permutations, modular above
  Bareiss,  ///< fraction-free elimination over the integers
  Modular,  ///< symmetric elimination modulo two 30-bit primes
};

inline constexpr std::size_t kBareissLimit = 240;

struct RankReport {
  std::uint64_t rank = 0;
  RankMethod method = RankMethod::Auto;
  /// Leading principal minors met during elimination were all positive.
  bool psd_consistent = true;
};

/// Dimension of the span of the permutation operators: the rank over Q of
/// the Gram matrix of the trace form, which is positive definite on
/// operators. Empty input gives 0; mixed degrees raise degree_mismatch.
std::uint64_t gram_rank(const std::vector<Permutation>& perms, RankMethod method = RankMethod::Auto);
RankReport gram_rank_report(const std::vector<Permutation>& perms, RankMethod method = RankMethod::Auto);

/// Same rank for arbitrary elements (Gram matrix of the trace pairing).
std::uint64_t gram_rank(const std::vector<AlgebraElement>& elements);

/// Rank of a symmetric positive semidefinite integer matrix by fraction-free
/// elimination with diagonal pivoting. `psd_consistent` is cleared if a
/// negative pivot or a nonzero off-diagonal remainder shows up.
std::uint64_t bareiss_rank_psd(std::vector<mpz_class> matrix, std::size_t size, bool& psd_consistent);
/// General fraction-free rank of a rows x cols integer matrix.
std::uint64_t bareiss_rank(std::vector<mpz_class> matrix, std::size_t rows, std::size_t cols);

/// Rank of the span of flattened operator matrices (rank over Q of a
/// 4^n-column matrix). Only meant for small n as an independent check.
std::uint64_t flattened_operator_rank(const std::vector<Permutation>& perms);

/// Traces out tensor factor i (1-based).
ExactOperator partial_trace_matrix(const ExactOperator& op, int i);

struct GaussianRational {
  Rational re;
  Rational im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

enum class Basis {
  MatrixUnits,  ///< index 2r+c stands for e_{r+1,c+1}
  Pauli,        ///< index 0,1,2,3 stands for sigma_0, sigma_x, sigma_y, sigma_z
};

struct BasisExpansion {
  Basis basis = Basis::Pauli;
  int degree = 0;
  /// Nonzero coefficients keyed by multi-index (one entry per tensor slot).
  std::map<std::vector<int>, GaussianRational> coefficients;
};

/// Coefficients c with operator_of(x) = sum c_k B_{k1}⊗...⊗B_{kn}.
BasisExpansion basis_expand(const AlgebraElement& x, Basis basis);
/// Rebuilds the operator from an expansion: returns (real part, imaginary part).
std::pair<ExactOperator, ExactOperator> reconstruct(const BasisExpansion& expansion);

std::string basis_label(Basis basis, int index);

}  // namespace swapalg
