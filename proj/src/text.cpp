// Text syntax shared by permutations and algebra elements.

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "swapalg/algebra.hpp"
#include "swapalg/error.hpp"
#include "swapalg/permutation.hpp"

namespace swapalg {

namespace {

constexpr std::string_view kMiddleDot = "\xC2\xB7";
constexpr std::string_view kMinusSign = "\xE2\x88\x92";

/// A permutation as written, before the degree is known.
struct RawPermutation {
  bool one_line = false;
  std::vector<int> images;
  std::vector<Cycle> cycles;
  int max_point = 0;
};

class Scanner {
public:
  explicit Scanner(std::string_view text) : s_(text) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view token) {
    skip_ws();
    if (s_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  bool peek_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  long number() {
    if (!peek_digit()) error("expected a number");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1'000'000'000) error("number too large");
    }
    return v;
  }
  std::string digits() {
    if (!peek_digit()) error("expected a number");
    std::string out;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) out += s_[pos_++];
    return out;
  }
  bool accept_minus() { return accept('-') || accept(kMinusSign); }
  bool accept_times() { return accept('*') || accept(kMiddleDot); }

  [[noreturn]] void error(const std::string& what) const {
    fail(Errc::parse, what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::optional<int> explicit_degree(Scanner& sc) {
  if (!sc.accept("n=")) return std::nullopt;
  const long n = sc.number();
  sc.accept(':') || sc.accept(';') || sc.accept(',');
  return static_cast<int>(n);
}

bool starts_permutation(Scanner& sc) { return sc.peek('(') || sc.peek('['); }

RawPermutation raw_permutation(Scanner& sc) {
  RawPermutation raw;
  if (sc.accept('[')) {
    raw.one_line = true;
    if (!sc.peek(']')) {
      do {
        raw.images.push_back(static_cast<int>(sc.number()));
      } while (sc.accept(','));
    }
    sc.expect(']');
    raw.max_point = static_cast<int>(raw.images.size());
    for (int v : raw.images) raw.max_point = std::max(raw.max_point, v);
    return raw;
  }
  while (sc.accept('(')) {
    Cycle c;
    if (!sc.peek(')')) {
      do {
        const int a = static_cast<int>(sc.number());
        if (a < 1) sc.error("points are numbered from 1");
        c.push_back(a);
        raw.max_point = std::max(raw.max_point, a);
      } while (sc.accept(','));
    }
    sc.expect(')');
    if (c.size() > 1) raw.cycles.push_back(std::move(c));
  }
  return raw;
}

Permutation realize(const RawPermutation& raw, int degree) {
  if (raw.one_line) {
    auto p = Permutation::from_images(raw.images);
    if (degree > p.degree()) return p.extended(degree);
    if (degree != p.degree())
      fail(Errc::degree_mismatch, "one-line form of length " + std::to_string(p.degree()) +
                                      " does not fit degree " + std::to_string(degree));
    return p;
  }
  if (raw.max_point > degree)
    fail(Errc::degree_mismatch, "point " + std::to_string(raw.max_point) + " exceeds degree " +
                                    std::to_string(degree));
  return Permutation::from_cycles(degree, raw.cycles);
}

Rational raw_rational(Scanner& sc) {
  mpz_class num(sc.digits());
  mpz_class den = 1;
  if (sc.accept('/')) {
    den = mpz_class(sc.digits());
    if (den == 0) sc.error("zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  Scanner sc(text);
  const bool negative = sc.accept_minus();
  if (!negative) sc.accept('+');
  Rational q = raw_rational(sc);
  if (!sc.done()) sc.error("trailing characters");
  return negative ? Rational(-q) : q;
}

Permutation parse_permutation(std::string_view text, int degree) {
  Scanner sc(text);
  if (auto n = explicit_degree(sc)) degree = std::max(degree, *n);
  if (sc.accept("id")) {
    if (!sc.done()) sc.error("trailing characters");
    return Permutation(degree > 0 ? degree : 1);
  }
  if (!starts_permutation(sc)) sc.error("expected '(' or '['");
  const auto raw = raw_permutation(sc);
  if (!sc.done()) sc.error("trailing characters");
  const int n = degree > 0 ? degree : std::max(1, raw.max_point);
  return realize(raw, n);
}

AlgebraElement parse_element(std::string_view text, int degree) {
  Scanner sc(text);
  if (auto n = explicit_degree(sc)) degree = std::max(degree, *n);

  struct RawTerm {
    Rational coefficient;
    std::optional<RawPermutation> perm;
  };
  std::vector<RawTerm> raw_terms;
  int max_point = 1;
  bool first = true;
  if (sc.accept('0') && sc.done()) return AlgebraElement(degree > 0 ? degree : 1);
  Scanner restart(text);
  sc = restart;
  explicit_degree(sc);
  while (!sc.done()) {
    bool negative = false;
    if (sc.accept_minus())
      negative = true;
    else if (!sc.accept('+') && !first)
      sc.error("expected '+' or '-' between terms");
    first = false;

    RawTerm term{Rational(1), std::nullopt};
    bool have_coefficient = false;
    if (sc.peek_digit()) {
      term.coefficient = raw_rational(sc);
      have_coefficient = true;
      sc.accept_times();
    }
    if (sc.accept("id")) {
      term.perm = RawPermutation{};
    } else if (starts_permutation(sc)) {
      term.perm = raw_permutation(sc);
      max_point = std::max(max_point, term.perm->max_point);
    } else if (!have_coefficient) {
      sc.error("expected a coefficient or a permutation");
    }
    if (negative) term.coefficient = -term.coefficient;
    raw_terms.push_back(std::move(term));
  }
  if (raw_terms.empty()) sc.error("empty element");

  const int n = degree > 0 ? degree : max_point;
  AlgebraElement out(n);
  for (const auto& t : raw_terms) {
    const Permutation g = t.perm ? realize(*t.perm, n) : Permutation(n);
    out.add_term(g, t.coefficient);
  }
  return out;
}

}  // namespace swapalg
