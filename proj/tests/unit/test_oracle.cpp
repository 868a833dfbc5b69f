#include <doctest.h>

#include <array>

#include "support.hpp"
#include "swapalg/error.hpp"
#include "swapalg/families.hpp"
#include "swapalg/formulas.hpp"
#include "swapalg/oracle.hpp"

using namespace swapalg;

namespace {

AlgebraElement el(const char* text, int degree = 0) { return parse_element(text, degree); }

bool same(const ExactOperator& op, const test::RefMatrix& m) {
  if (op.dimension() != m.dim) return false;
  for (std::size_t r = 0; r < m.dim; ++r)
    for (std::size_t c = 0; c < m.dim; ++c)
      if (op.at(r, c) != m.at(r, c)) return false;
  return true;
}

/// Reference partial trace over slot i built from tensor digits.
test::RefMatrix reference_partial_trace(const test::RefMatrix& m, int i) {
  test::RefMatrix out{m.n - 1, m.dim / 2, std::vector<Rational>(m.dim * m.dim / 4, Rational(0))};
  for (std::size_t r = 0; r < out.dim; ++r)
    for (std::size_t c = 0; c < out.dim; ++c)
      for (int t = 0; t < 2; ++t) {
        auto rd = test::digits(r, out.n), cd = test::digits(c, out.n);
        rd.insert(rd.begin() + (i - 1), t);
        cd.insert(cd.begin() + (i - 1), t);
        out.at(r, c) += m.at(test::undigits(rd), test::undigits(cd));
      }
  return out;
}

struct Gauss {
  Rational re, im;
};

Gauss mul(const Gauss& a, const Gauss& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

/// Pauli matrix entries: sigma_k[r][c].
Gauss pauli(int k, int r, int c) {
  switch (k) {
    case 0: return {r == c ? 1 : 0, 0};
    case 1: return {r != c ? 1 : 0, 0};
    case 2: return {0, r == c ? 0 : (r == 0 ? -1 : 1)};
    default: return {r == c ? (r == 0 ? 1 : -1) : 0, 0};
  }
}

/// c_k = tr(P_k^dagger M) / 2^n, by explicit Kronecker products.
Gauss reference_pauli(const test::RefMatrix& m, const std::vector<int>& k) {
  Gauss sum{0, 0};
  for (std::size_t r = 0; r < m.dim; ++r)
    for (std::size_t c = 0; c < m.dim; ++c) {
      if (sgn(m.at(r, c)) == 0) continue;
      const auto rd = test::digits(r, m.n), cd = test::digits(c, m.n);
      Gauss p{1, 0};
      for (int s = 0; s < m.n; ++s) p = mul(p, pauli(k[s], rd[s], cd[s]));
      // conj(P[r][c]) * M[r][c]
      sum.re += p.re * m.at(r, c);
      sum.im -= p.im * m.at(r, c);
    }
  const Rational scale(1, 1u << m.n);
  return {sum.re * scale, sum.im * scale};
}

}  // namespace

TEST_CASE("operator_of matches the tensor-index construction") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : test::every_permutation(n)) REQUIRE(same(operator_of(p), test::reference_matrix(AlgebraElement(p))));
  for (int k = 0; k < 30; ++k) {
    const auto x = test::random_element(5, 5);
    REQUIRE(same(operator_of(x), test::reference_matrix(x)));
  }
  const auto swap = operator_of(Permutation::from_cycles(2, {{1, 2}}));
  CHECK(swap.to_dense_text() == "1 0 0 0\n0 0 1 0\n0 1 0 0\n0 0 0 1\n");
}

TEST_CASE("operator_of is a homomorphism") {
  const auto s4 = test::every_permutation(4);
  for (const auto& g : s4)
    for (const auto& h : s4) REQUIRE(operator_of(compose(g, h)) == operator_of(g) * operator_of(h));
  for (int k = 0; k < 10; ++k) {
    const auto x = test::random_element(4, 4), y = test::random_element(4, 4);
    REQUIRE(operator_of(x * y) == operator_of(x) * operator_of(y));
    REQUIRE(same(operator_of(x * y), test::reference_product(test::reference_matrix(x), test::reference_matrix(y))));
  }
}

TEST_CASE("injectivity holds exactly up to n = 2") {
  for (int n = 1; n <= 2; ++n) {
    const auto perms = all_permutations(n);
    CHECK(flattened_operator_rank(perms) == perms.size());
  }
  for (int n = 3; n <= 6; ++n) CHECK(operator_of(antisymmetrizer({1, 2, 3}, n)).is_zero());
  CHECK(flattened_operator_rank(all_permutations(3)) == 5);
  CHECK_FALSE(operator_of(antisymmetrizer({1, 2}, 2)).is_zero());
}

TEST_CASE("trace of a permutation operator") {
  CHECK(trace_of(Permutation(4)) == 16);
  CHECK(trace_of(Permutation::from_cycles(3, {{1, 2, 3}})) == 2);
  for (const auto& p : test::every_permutation(5)) REQUIRE(operator_of(p).trace() == Rational(trace_of(p)));
  // sparse storage above degree 8
  for (int n = 9; n <= 10; ++n)
    for (int k = 0; k < 3; ++k) {
      const auto p = test::random_permutation(n);
      REQUIRE(operator_of(p).trace() == Rational(trace_of(p)));
    }
}

TEST_CASE("equality in the swap algebra") {
  const auto x = test::random_element(4, 5);
  CHECK(equal_in_sigma(x, x));
  const auto q = formulas::four_cycle();
  CHECK(equal_in_sigma(q.lhs, q.rhs));
  CHECK(equal_in_sigma(el("(1,2,3)+(1,3,2)"), el("(1,2)+(1,3)+(2,3)-1")));
  CHECK_FALSE(equal_in_sigma(el("(1,2)", 3), el("(1,3)")));
  for (int k = 0; k < 40; ++k) {
    const int n = 3 + k % 3;
    const auto a = test::random_element(n, 4);
    const auto kernel = test::random_element(n, 2) * antisymmetrizer({1, 2, 3}, n) * test::random_element(n, 2);
    const auto b = k % 2 ? a + kernel : test::random_element(n, 4);
    REQUIRE(equal_in_sigma(a, b) == equal_in_sigma_gram(a, b));
    REQUIRE(equal_as_operators(a, b) == equal_in_sigma(a, b));
    if (k % 2) REQUIRE(equal_in_sigma(a, b));
  }
}

TEST_CASE("trace pairing is the Hilbert-Schmidt form") {
  for (int k = 0; k < 20; ++k) {
    const auto x = test::random_element(4, 4), y = test::random_element(4, 4);
    const auto mx = test::reference_matrix(x), my = test::reference_matrix(y);
    Rational hs = 0;
    for (std::size_t r = 0; r < mx.dim; ++r)
      for (std::size_t c = 0; c < mx.dim; ++c) hs += mx.at(r, c) * my.at(r, c);
    REQUIRE(trace_pairing(x, y) == hs);
  }
}

TEST_CASE("Gram ranks") {
  CHECK(gram_rank(std::vector<Permutation>{}) == 0);
  CHECK_THROWS_AS(gram_rank(std::vector<Permutation>{Permutation(2), Permutation(3)}), Error);
  for (int n = 1; n <= 6; ++n) {
    const auto perms = all_permutations(n);
    const auto bareiss = gram_rank_report(perms, RankMethod::Bareiss);
    const auto modular = gram_rank_report(perms, RankMethod::Modular);
    CHECK(bareiss.rank == catalan(n).get_ui());
    CHECK(modular.rank == catalan(n).get_ui());
    CHECK(bareiss.psd_consistent);
    CHECK(modular.psd_consistent);
    if (n <= 4) CHECK(flattened_operator_rank(perms) == catalan(n).get_ui());
  }
  for (int k = 0; k < 30; ++k) {
    const int n = 3 + k % 2;
    std::vector<Permutation> subset;
    for (int t = 0; t < 1 + k % 12; ++t) subset.push_back(test::random_permutation(n));
    const auto flat = flattened_operator_rank(subset);
    REQUIRE(gram_rank(subset, RankMethod::Bareiss) == flat);
    REQUIRE(gram_rank(subset, RankMethod::Modular) == flat);
  }
  for (int n = 2; n <= 8; ++n)
    CHECK(gram_rank(transpositions_plus_identity(n)) == static_cast<std::uint64_t>(1 + n * (n - 1) / 2));
  for (int n = 1; n <= 7; ++n) {
    CHECK(gram_rank(good_permutations(n, 2)) == catalan(n).get_ui());
    CHECK(gram_rank(special_permutations(n)) == catalan(n).get_ui());
    CHECK(gram_rank(involutions(n)) == symmetric_dim(n));
  }
  const auto g = gram_matrix(all_permutations(3));
  CHECK(g.size() == 6);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(g.at(i, i) == 8);
}

TEST_CASE("rank of elements and general Bareiss") {
  std::vector<AlgebraElement> xs{el("(1,2)", 3), el("(1,3)", 3), el("(1,2)+(1,3)", 3), antisymmetrizer({1, 2, 3}, 3)};
  CHECK(gram_rank(xs) == 2);
  CHECK(bareiss_rank({1, 2, 3, 2, 4, 6, 1, 0, 1}, 3, 3) == 2);
  CHECK(bareiss_rank({0, 0, 0, 0}, 2, 2) == 0);
  bool psd = true;
  CHECK(bareiss_rank_psd({2, 1, 1, 2}, 2, psd) == 2);
  CHECK(psd);
  CHECK(bareiss_rank_psd({1, 2, 2, 1}, 2, psd) == 2);
  CHECK_FALSE(psd);
}

TEST_CASE("matrix partial trace") {
  for (int n = 2; n <= 5; ++n) {
    const auto id = partial_trace_matrix(ExactOperator::identity(n), 1);
    auto twice = ExactOperator::identity(n - 1);
    twice *= Rational(2);
    CHECK(id == twice);
  }
  for (int i = 2; i <= 4; ++i)
    CHECK(partial_trace_matrix(operator_of(Permutation::from_cycles(4, {{1, i}})), 1) == ExactOperator::identity(3));
  for (const auto& p : test::every_permutation(5))
    for (int i = 1; i <= 5; ++i) {
      const auto op = partial_trace_matrix(operator_of(p), i);
      REQUIRE(same(op, reference_partial_trace(test::reference_matrix(AlgebraElement(p)), i)));
      REQUIRE(op == operator_of(partial_trace_symbolic(AlgebraElement(p), i)));
    }
  CHECK_THROWS_AS(partial_trace_matrix(ExactOperator::identity(3), 4), Error);
  CHECK_THROWS_AS(partial_trace_matrix(ExactOperator::identity(1), 1), Error);
}

TEST_CASE("basis expansions") {
  const AlgebraElement swap(Permutation::from_cycles(2, {{1, 2}}));
  const auto p = basis_expand(swap, Basis::Pauli);
  CHECK(p.coefficients.size() == 4);
  for (int k = 0; k < 4; ++k) CHECK(p.coefficients.at({k, k}) == GaussianRational{Rational(1, 2), 0});
  const auto u = basis_expand(swap, Basis::MatrixUnits);
  CHECK(u.coefficients.size() == 4);
  for (auto idx : {std::vector<int>{0, 0}, {1, 2}, {2, 1}, {3, 3}}) CHECK(u.coefficients.at(idx) == GaussianRational{1, 0});
  for (int n = 1; n <= 4; ++n) {
    const auto e = basis_expand(AlgebraElement::identity(n), Basis::Pauli);
    CHECK(e.coefficients.size() == 1);
    CHECK(e.coefficients.at(std::vector<int>(n, 0)) == GaussianRational{1, 0});
  }
  CHECK(basis_label(Basis::Pauli, 2) == "Y");
  CHECK(basis_label(Basis::MatrixUnits, 1) == "e12");

  for (int k = 0; k < 20; ++k) {
    const int n = 1 + k % 3;
    const auto x = test::random_element(n, 4);
    const auto m = test::reference_matrix(x);
    const auto e = basis_expand(x, Basis::Pauli);
    std::vector<int> idx(n, 0);
    for (std::size_t code = 0; code < (std::size_t{1} << (2 * n)); ++code) {
      for (int s = 0; s < n; ++s) idx[s] = static_cast<int>((code >> (2 * (n - 1 - s))) & 3u);
      const auto want = reference_pauli(m, idx);
      const auto it = e.coefficients.find(idx);
      const GaussianRational got = it == e.coefficients.end() ? GaussianRational{0, 0} : it->second;
      REQUIRE(got.re == want.re);
      REQUIRE(got.im == want.im);
    }
    for (Basis b : {Basis::Pauli, Basis::MatrixUnits}) {
      const auto [re, im] = reconstruct(basis_expand(x, b));
      REQUIRE(re == operator_of(x));
      REQUIRE(im.is_zero());
    }
  }
}

TEST_CASE("degree cap") {
  const int saved = degree_cap();
  set_degree_cap(3);
  CHECK_THROWS_AS(operator_of(Permutation(4)), Error);
  CHECK(equal_as_operators(el("(1,2,3,4)"), el("(1,2,3,4)")));
  set_degree_cap(saved);
  CHECK_THROWS_AS(set_degree_cap(0), Error);
  CHECK_THROWS_AS(set_degree_cap(100), Error);
  CHECK(degree_cap() == saved);
}
