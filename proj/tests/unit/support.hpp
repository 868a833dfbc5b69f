#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "swapalg/algebra.hpp"
#include "swapalg/permutation.hpp"

namespace test {

using swapalg::AlgebraElement;
using swapalg::Permutation;
using swapalg::Rational;

/// Dense 2^n x 2^n matrix built straight from tensor indices: the basis
/// vector e_{i_1} (x) ... (x) e_{i_n} goes to the one whose slot g(k) holds i_k.
struct RefMatrix {
  int n = 0;
  std::size_t dim = 0;
  std::vector<Rational> a;

  Rational& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
  bool operator==(const RefMatrix&) const = default;
};

inline std::vector<int> digits(std::size_t index, int n) {
  std::vector<int> d(n);
  for (int k = n - 1; k >= 0; --k, index /= 2) d[k] = static_cast<int>(index % 2);
  return d;
}

inline std::size_t undigits(const std::vector<int>& d) {
  std::size_t v = 0;
  for (int x : d) v = 2 * v + x;
  return v;
}

inline RefMatrix reference_matrix(const AlgebraElement& x) {
  RefMatrix m{x.degree(), std::size_t{1} << x.degree(), {}};
  m.a.assign(m.dim * m.dim, Rational(0));
  for (const auto& [g, c] : x.terms())
    for (std::size_t col = 0; col < m.dim; ++col) {
      const auto in = digits(col, m.n);
      std::vector<int> out(m.n);
      for (int k = 1; k <= m.n; ++k) out[g(k) - 1] = in[k - 1];
      m.at(undigits(out), col) += c;
    }
  return m;
}

inline RefMatrix reference_product(const RefMatrix& x, const RefMatrix& y) {
  RefMatrix m{x.n, x.dim, std::vector<Rational>(x.dim * x.dim, Rational(0))};
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t k = 0; k < x.dim; ++k)
      if (sgn(x.at(i, k)) != 0)
        for (std::size_t j = 0; j < x.dim; ++j) m.at(i, j) += x.at(i, k) * y.at(k, j);
  return m;
}

inline std::vector<Permutation> every_permutation(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do out.push_back(Permutation::from_images(img));
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(12345);
  return engine;
}

inline Permutation random_permutation(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng());
  return Permutation::from_images(img);
}

inline Rational random_rational() {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  Rational q(num(rng()), den(rng()));
  q.canonicalize();
  return q;
}

inline AlgebraElement random_element(int n, int max_terms) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  AlgebraElement x(n);
  for (int k = terms(rng()); k > 0; --k) x.add_term(random_permutation(n), random_rational());
  return x;
}

inline bool is_special_support(const AlgebraElement& x) {
  for (const auto& [g, c] : x.terms())
    if (!swapalg::is_special(g)) return false;
  return true;
}

}  // namespace test
