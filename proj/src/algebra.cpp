#include "swapalg/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "swapalg/error.hpp"

namespace swapalg {

namespace {

void check_same_degree(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.degree() != y.degree())
    fail(Errc::degree_mismatch, "degree mismatch: " + std::to_string(x.degree()) + " vs " +
                                    std::to_string(y.degree()));
}

}  // namespace

std::string to_string(const Rational& q) { return q.get_str(); }

AlgebraElement::AlgebraElement(int degree) : degree_(degree) {
  if (degree < 1 || degree > kMaxDegree) fail(Errc::out_of_range, "bad degree " + std::to_string(degree));
}

AlgebraElement::AlgebraElement(const Permutation& g, Rational coefficient) : degree_(g.degree()) {
  add_term(g, coefficient);
}

Rational AlgebraElement::coefficient(const Permutation& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const Permutation& g, const Rational& c) {
  if (g.degree() != degree_)
    fail(Errc::degree_mismatch, "term of degree " + std::to_string(g.degree()) +
                                    " added to element of degree " + std::to_string(degree_));
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (inserted) {
    it->second.canonicalize();
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& y) {
  check_same_degree(*this, y);
  for (const auto& [g, c] : y.terms_) add_term(g, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& y) {
  check_same_degree(*this, y);
  for (const auto& [g, c] : y.terms_) add_term(g, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  Rational k = c;
  k.canonicalize();
  for (auto& [g, coef] : terms_) coef *= k;
  return *this;
}

AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
AlgebraElement operator-(AlgebraElement x) { return x *= Rational(-1); }
AlgebraElement operator*(AlgebraElement x, const Rational& c) { return x *= c; }
AlgebraElement operator*(const Rational& c, AlgebraElement x) { return x *= c; }

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  check_same_degree(x, y);
  AlgebraElement out(x.degree());
  for (const auto& [g, a] : x.terms())
    for (const auto& [h, b] : y.terms()) out.add_term(compose(g, h), a * b);
  return out;
}

AlgebraElement adjoint(const AlgebraElement& x) {
  AlgebraElement out(x.degree());
  for (const auto& [g, c] : x.terms()) out.add_term(inverse(g), c);
  return out;
}

AlgebraElement symmetric_part(const AlgebraElement& x) { return (x + adjoint(x)) * Rational(1, 2); }

AlgebraElement antisymmetric_part(const AlgebraElement& x) { return (x - adjoint(x)) * Rational(1, 2); }

bool is_symmetric(const AlgebraElement& x) { return adjoint(x) == x; }

AlgebraElement antisymmetrizer(const std::vector<int>& points, int degree) {
  AlgebraElement out(degree);
  std::vector<bool> seen(degree + 1, false);
  for (int a : points) {
    if (a < 1 || a > degree)
      fail(Errc::out_of_range, "antisymmetrizer point " + std::to_string(a) + " outside 1.." +
                                   std::to_string(degree));
    if (seen[a]) fail(Errc::invalid_argument, "antisymmetrizer point " + std::to_string(a) + " repeated");
    seen[a] = true;
  }
  // Enumerate arrangements of the chosen points in their own slots.
  std::vector<int> order(points.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  do {
    std::vector<int> img(degree);
    for (int k = 1; k <= degree; ++k) img[k - 1] = k;
    for (std::size_t k = 0; k < order.size(); ++k) img[points[k] - 1] = points[order[k]];
    const auto g = Permutation::from_images(img);
    out.add_term(g, sign(g));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

Permutation partial_trace_permutation(const Permutation& g, int i, bool& was_fixed) {
  const int n = g.degree();
  if (n < 2) fail(Errc::invalid_argument, "partial trace needs degree >= 2");
  if (i < 1 || i > n) fail(Errc::out_of_range, "partial trace point " + std::to_string(i) + " outside 1.." + std::to_string(n));
  was_fixed = g(i) == i;
  auto relabel = [i](int a) { return a < i ? a : a - 1; };
  std::vector<int> img;
  img.reserve(n - 1);
  for (int a = 1; a <= n; ++a) {
    if (a == i) continue;
    const int b = g(a) == i ? g(i) : g(a);
    img.push_back(relabel(b));
  }
  return Permutation::from_images(img);
}

AlgebraElement partial_trace_symbolic(const AlgebraElement& x, int i, int d) {
  if (x.degree() < 2) fail(Errc::invalid_argument, "partial trace needs degree >= 2");
  if (i < 1 || i > x.degree())
    fail(Errc::out_of_range, "partial trace point " + std::to_string(i) + " outside 1.." +
                                 std::to_string(x.degree()));
  AlgebraElement out(x.degree() - 1);
  for (const auto& [g, c] : x.terms()) {
    bool fixed = false;
    const auto h = partial_trace_permutation(g, i, fixed);
    out.add_term(h, fixed ? c * d : c);
  }
  return out;
}

AlgebraElement extended(const AlgebraElement& x, int m) {
  AlgebraElement out(m);
  for (const auto& [g, c] : x.terms()) out.add_term(g.extended(m), c);
  return out;
}

std::string to_string(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : x.terms()) {
    const bool negative = sgn(c) < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const Rational mag = abs(c);
    os << mag.get_str();
    if (!g.is_identity()) os << '*' << to_cycle_string(g);
  }
  return os.str();
}

}  // namespace swapalg
