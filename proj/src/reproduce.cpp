#include "swapalg/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>

#include "swapalg/error.hpp"
#include "swapalg/families.hpp"
#include "swapalg/formulas.hpp"
#include "swapalg/oracle.hpp"
#include "swapalg/rewrite.hpp"
#include "swapalg/serialize.hpp"

namespace swapalg {

namespace {

/// Collects failed checks for one criterion.
class Checks {
public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string& text) { notes_.push_back(text); }

  bool passed() const { return failed_ == 0; }
  std::string detail() const {
    std::string out;
    for (const auto& n : notes_) out += (out.empty() ? "" : "; ") + n;
    if (failed_) {
      out += (out.empty() ? "" : "; ") + std::to_string(failed_) + " of " + std::to_string(count_) + " checks failed:";
      for (const auto& f : failures_) out += " [" + f + "]";
    }
    return out;
  }

private:
  std::size_t count_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(img);
}

AlgebraElement random_element(int n, std::mt19937_64& rng, int max_terms) {
  std::uniform_int_distribution<int> terms(1, max_terms), num(-4, 4), den(1, 3);
  AlgebraElement x(n);
  const int k = terms(rng);
  for (int t = 0; t < k; ++t) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    x.add_term(random_permutation(n, rng), q);
  }
  return x;
}

bool power_of_two(const mpz_class& d) { return d > 0 && mpz_popcount(d.get_mpz_t()) == 1; }

std::string seq_text(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (auto x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

// 1 -------------------------------------------------------------------------
void relation_identities(Checks& c) {
  const auto ids = formulas::golden_identities();
  for (const auto& id : ids) c.expect(equal_in_sigma(id.lhs, id.rhs), id.name);
  for (int n = 3; n <= 6; ++n)
    c.expect(operator_of(antisymmetrizer({1, 2, 3}, n)).is_zero(), "antisymmetrizer in S" + std::to_string(n));
  c.note(std::to_string(ids.size()) + " identities; antisymmetrizer vanishes for n=3..6");
}

// 2 -------------------------------------------------------------------------
void check_special_form(Checks& c, const Permutation& p, const AlgebraElement& s, bool gram) {
  const std::string name = to_cycle_string(p);
  bool special = true, dyadic = true;
  for (const auto& [g, q] : s.terms()) {
    special = special && is_special(g);
    dyadic = dyadic && power_of_two(q.get_den());
  }
  c.expect(special, name + " special support");
  c.expect(dyadic, name + " dyadic coefficients");
  const AlgebraElement x(p);
  c.expect(gram ? equal_in_sigma_gram(x, s) : equal_in_sigma(x, s), name + " oracle");
}

void specialization_soundness(Checks& c, std::mt19937_64& rng) {
  SpecializeOptions quiet;
  quiet.record_trace = false;
  std::size_t count = 0;
  for (int n = 3; n <= 6; ++n)
    for (const auto& p : all_permutations(n)) {
      check_special_form(c, p, specialize(AlgebraElement(p), quiet).first, false);
      ++count;
    }
  for (int k = 0; k < 200; ++k) {
    const auto p = random_permutation(7, rng);
    check_special_form(c, p, specialize(AlgebraElement(p), quiet).first, false);
  }
  for (int k = 0; k < 50; ++k) {
    const auto p = random_permutation(8, rng);
    check_special_form(c, p, specialize(AlgebraElement(p), quiet).first, true);
  }
  c.note(std::to_string(count) + " permutations of S3..S6, 200 of S7, 50 of S8");
}

// 3 -------------------------------------------------------------------------
void check_straightened(Checks& c, const Permutation& p) {
  const auto [s, trace] = straighten_3good(p);
  const std::string name = to_one_line_string(p);
  bool integral = true, good = true;
  for (const auto& [g, q] : s.terms()) {
    integral = integral && q.get_den() == 1;
    good = good && is_good(g, 2);
  }
  c.expect(integral, name + " integer coefficients");
  c.expect(good, name + " 3-good support");
  c.expect(equal_in_sigma(AlgebraElement(p), s), name + " oracle");
  c.expect(shared_straightening_cache().expand_element(p) == s, name + " cache agrees");
}

void straightening_soundness(Checks& c, std::mt19937_64& rng) {
  std::size_t count = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : all_permutations(n)) {
      check_straightened(c, p);
      ++count;
    }
  for (int k = 0; k < 100; ++k) check_straightened(c, random_permutation(6, rng));
  for (int k = 0; k < 30; ++k) check_straightened(c, random_permutation(7, rng));
  c.note(std::to_string(count) + " permutations of S1..S5, 100 of S6, 30 of S7");
}

// 4 -------------------------------------------------------------------------
void dimension_table(Checks& c, bool big) {
  std::vector<std::uint64_t> all, good, specials;
  for (int n = 1; n <= 7; ++n) {
    const auto cn = catalan(n).get_ui();
    all.push_back(gram_rank(all_permutations(n)));
    good.push_back(gram_rank(good_permutations(n, 2)));
    specials.push_back(gram_rank(special_permutations(n)));
    const std::string tag = "n=" + std::to_string(n);
    c.expect(all.back() == cn, tag + " all");
    c.expect(good.back() == cn, tag + " 3-good");
    c.expect(specials.back() == cn, tag + " specials");
  }
  c.note("all " + seq_text(all) + "; 3-good " + seq_text(good) + "; specials " + seq_text(specials));
  if (big) {
    const auto g8 = gram_rank(good_permutations(8, 2));
    const auto s8 = gram_rank(special_permutations(8));
    c.expect(g8 == 1430, "n=8 3-good");
    c.expect(s8 == 1430, "n=8 specials");
    c.note("n=8: 3-good " + std::to_string(g8) + ", specials " + std::to_string(s8));
  }
}

// 5 -------------------------------------------------------------------------
void involution_table(Checks& c, bool big) {
  const std::vector<std::uint64_t> expected{1, 2, 4, 10, 26, 76, 232, 750, 2494, 8524};
  std::vector<std::uint64_t> ranks, counts;
  const int top = big ? 10 : 8;
  for (int n = 1; n <= top; ++n) {
    ranks.push_back(gram_rank(involutions(n)));
    counts.push_back(involution_count(n).get_ui());
    c.expect(ranks.back() == expected[n - 1], "n=" + std::to_string(n));
    c.expect(ranks.back() == symmetric_dim(n), "symmetric_dim(" + std::to_string(n) + ")");
  }
  for (int n = 1; n <= 7; ++n) c.expect(ranks[n - 1] == counts[n - 1], "rank = I(n) for n=" + std::to_string(n));
  c.expect(ranks[7] == 750 && counts[7] == 764, "750 < I(8) = 764");
  c.note("ranks " + seq_text(ranks) + "; I(n) " + seq_text(counts));
}

// 6 -------------------------------------------------------------------------
void symmetric_structure(Checks& c, std::mt19937_64& rng) {
  int tested = 0;
  while (tested < 100) {
    const auto a = random_element(6, rng, 4);
    const auto x = a + adjoint(a);
    if (x.is_zero()) continue;
    ++tested;
    const auto y = symmetric_to_involutions(x);
    bool invol = true;
    for (const auto& [g, q] : y.terms()) invol = invol && is_involution(g);
    c.expect(invol, to_string(x) + " involution support");
    c.expect(equal_in_sigma(x, y), to_string(x) + " oracle");
  }
  std::string ranks;
  for (int n = 3; n <= 6; ++n) {
    const auto anti = antisymmetric_specials(n);
    for (const auto& e : anti) c.expect(adjoint(e) == -e, "antisymmetric " + to_string(e));
    const auto ra = gram_rank(anti);
    const auto rs = gram_rank(involutions(n));
    c.expect(ra + rs == catalan(n).get_ui(), "n=" + std::to_string(n) + " antisymmetric + symmetric = C_n");
    ranks += (ranks.empty() ? "" : ", ") + std::to_string(ra) + "+" + std::to_string(rs);
  }
  c.note("100 symmetric elements of S6; antisymmetric+symmetric ranks n=3..6: " + ranks);
}

// 7 -------------------------------------------------------------------------
void transposition_independence(Checks& c) {
  std::vector<std::uint64_t> ranks;
  for (int n = 2; n <= 8; ++n) {
    ranks.push_back(gram_rank(transpositions_plus_identity(n)));
    c.expect(ranks.back() == 1 + static_cast<std::uint64_t>(n * (n - 1) / 2), "n=" + std::to_string(n));
  }
  c.note("ranks n=2..8: " + seq_text(ranks));
}

// 8 -------------------------------------------------------------------------
void partial_trace_coherence(Checks& c) {
  for (const auto& p : all_permutations(5)) {
    const auto op = operator_of(p);
    for (int i = 1; i <= 5; ++i)
      c.expect(operator_of(partial_trace_symbolic(AlgebraElement(p), i)) == partial_trace_matrix(op, i),
               to_cycle_string(p) + " t_" + std::to_string(i));
  }
  // t_1 on the subgroup fixing 1, and on tau (1,i)
  for (const auto& tau : all_permutations(5)) {
    if (tau(1) != 1) continue;
    bool fixed = false;
    const AlgebraElement reduced(partial_trace_permutation(tau, 1, fixed));
    c.expect(partial_trace_symbolic(AlgebraElement(tau), 1) == reduced * Rational(2), "t(sigma) = 2 sigma");
    for (int i = 2; i <= 5; ++i) {
      const auto g = compose(tau, Permutation::from_cycles(5, {{1, i}}));
      c.expect(partial_trace_symbolic(AlgebraElement(g), 1) == reduced, "t(tau (1,i)) = tau");
      c.expect(partial_trace_matrix(operator_of(g), 1) == operator_of(reduced), "t(tau (1,i)) = tau as operators");
    }
  }
  const auto t4 = partial_trace_symbolic(AlgebraElement(Permutation::from_images({3, 4, 1, 2})), 4);
  c.expect(t4 == AlgebraElement(Permutation::from_images({3, 2, 1})), "t_4([3,4,1,2]) = [3,2,1]");
  for (const auto& g : special_permutations(6))
    for (int i = 1; i <= 6; ++i) {
      bool fixed = false;
      c.expect(is_special(partial_trace_permutation(g, i, fixed)), to_cycle_string(g) + " stays special");
    }
  c.note("all of S5 x 5 traces; trace identities on S5; specials of S6 closed");
}

// 9 -------------------------------------------------------------------------
void basis_expansions(Checks& c, std::mt19937_64& rng) {
  const AlgebraElement swap(Permutation::from_cycles(2, {{1, 2}}));
  const auto pauli = basis_expand(swap, Basis::Pauli);
  std::map<std::vector<int>, GaussianRational> want_pauli;
  for (int k = 0; k < 4; ++k) want_pauli[{k, k}] = {Rational(1, 2), 0};
  c.expect(pauli.coefficients == want_pauli, "(1,2) Pauli");
  const auto units = basis_expand(swap, Basis::MatrixUnits);
  std::map<std::vector<int>, GaussianRational> want_units;
  for (auto idx : {std::vector<int>{0, 0}, {1, 2}, {2, 1}, {3, 3}}) want_units[idx] = {1, 0};
  c.expect(units.coefficients == want_units, "(1,2) matrix units");

  std::uniform_int_distribution<int> degree(1, 4);
  for (int k = 0; k < 50; ++k) {
    const auto x = random_element(degree(rng), rng, 5);
    const auto op = operator_of(x);
    for (Basis b : {Basis::Pauli, Basis::MatrixUnits}) {
      const auto [re, im] = reconstruct(basis_expand(x, b));
      c.expect(re == op && im.is_zero(), to_string(x) + " reconstruction");
    }
  }
  c.note("closed-form coefficients of (1,2); 50 random reconstructions in both bases");
}

// 10 ------------------------------------------------------------------------
void rsk_checks(Checks& c) {
  std::vector<std::uint64_t> counts;
  for (int n = 1; n <= 8; ++n) {
    counts.push_back(good_permutations(n, 2).size());
    c.expect(counts.back() == catalan(n).get_ui(), "3-good count n=" + std::to_string(n));
  }
  for (const auto& p : all_permutations(7))
    c.expect((longest_decreasing_subsequence(p) <= 2) == (rsk(p).height() <= 2), to_one_line_string(p));
  for (const auto& p : all_permutations(6)) {
    const auto t = rsk(p);
    c.expect(is_involution(p) == (t.p_tableau == t.q_tableau), to_one_line_string(p) + " P=Q");
  }
  c.note("3-good counts " + seq_text(counts) + "; S7 goodness agrees; S6 involution iff P=Q");
}

// 11 ------------------------------------------------------------------------
bool is_type_33(const Permutation& g) { return cycle_type(g) == std::vector<int>{3, 3}; }

AlgebraElement part_33(const AlgebraElement& x) {
  AlgebraElement out(x.degree());
  for (const auto& [g, q] : x.terms())
    if (is_type_33(g)) out.add_term(g, q);
  return out;
}

/// Removes cycles longer than 3. Six-cycles are spliced written to end at 1.
AlgebraElement reduce_long_cycles(AlgebraElement x) {
  for (;;) {
    const auto it = std::find_if(x.terms().begin(), x.terms().end(),
                                 [](const auto& t) { return longest_cycle(t.first) > 3; });
    if (it == x.terms().end()) return x;
    const Term term{it->first, it->second};
    Cycle longest;
    for (auto& cyc : cycle_decomposition(term.perm).cycles)
      if (cyc.size() > longest.size()) longest = cyc;
    RuleApplication app = longest.size() == 4 ? expand_4cycle(term, longest) : [&] {
      if (longest.size() == 6) std::rotate(longest.begin(), longest.begin() + 1, longest.end());
      return splice_long_cycle(term, longest);
    }();
    x.add_term(term.perm, -term.coefficient);
    x += app.replacement;
  }
}

/// Rewrites every 3-cycle of a (3,3) term into increasing form.
AlgebraElement normalize_33(AlgebraElement x) {
  for (;;) {
    bool changed = false;
    for (const auto& [g, q] : x.terms()) {
      if (!is_type_33(g)) continue;
      for (const auto& cyc : cycle_decomposition(g).cycles) {
        if (cyc.size() != 3 || cyc[1] < cyc[2]) continue;
        const Term term{g, q};
        const auto app = normalize_3cycle(term, cyc);
        x.add_term(term.perm, -term.coefficient);
        x += app.replacement;
        changed = true;
        break;
      }
      if (changed) break;
    }
    if (!changed) return x;
  }
}

void rule_derivation_replay(Checks& c) {
  const int n = 6;
  const auto a6 = antisymmetrizer({1, 2, 3}, n);
  const auto r1 = parse_element("(5,6,1)(3,4)", n) * a6;
  const auto r2 = parse_element("(6,1)(4,5,3)", n) * a6;
  c.expect(r1 == parse_element("(1,2,4,3,5,6) + (1,4,3,2,5,6) - (2,5,6,1)(3,4) - (4,3,5,6,1) - (5,6,1)(4,3,2) + "
                               "(5,6,1)(3,4)",
                               n),
           "first relation expands as printed");
  c.expect(r2 == parse_element("(1,2,4,5,3,6) + (1,4,5,3,2,6) - (2,6,1)(4,5,3) - (4,5,3,6,1) - (6,1)(4,5,3,2) + "
                               "(6,1)(4,5,3)",
                               n),
           "second relation expands as printed");
  c.expect(operator_of(r1).is_zero() && operator_of(r2).is_zero(), "both relations vanish");

  const auto s1 = normalize_33(reduce_long_cycles(r1)) * Rational(2);
  const auto s2 = normalize_33(reduce_long_cycles(r2)) * Rational(2);
  c.expect(part_33(s1) == parse_element("-(3,4,5)(1,2,6) - (2,3,5)(1,4,6) + 2*(2,3,4)(1,5,6)", n),
           "(3,3) part of the first relation");
  c.expect(part_33(s2) == parse_element("-(3,4,5)(1,2,6) - (2,3,5)(1,4,6)", n), "(3,3) part of the second relation");

  const auto diff = s1 - s2;  // 0 = 2T + S
  const auto t = parse_element("(2,3,4)(1,5,6)", n);
  c.expect(part_33(diff) == t * Rational(2), "difference has the single (3,3) term 2(2,3,4)(1,5,6)");
  c.expect(operator_of(diff).is_zero(), "difference vanishes");
  AlgebraElement rest = diff - t * Rational(2);
  bool special = true;
  for (const auto& [g, q] : rest.terms()) special = special && is_special(g);
  c.expect(special, "remainder is special");

  // 8(4,3,2)(5,6,1) = 8(2,4,3)(1,5,6); normalize (2,4,3), then T = -rest/2.
  const Permutation lhs = Permutation::from_cycles(n, {{4, 3, 2}, {5, 6, 1}});
  auto derived = normalize_3cycle(Term{lhs, Rational(8)}, {2, 4, 3}).replacement;
  const Permutation tp = t.terms().begin()->first;
  const Rational ct = derived.coefficient(tp);
  derived.add_term(tp, -ct);
  derived += rest * Rational(-ct / 2);
  bool derived_special = true;
  for (const auto& [g, q] : derived.terms()) derived_special = derived_special && is_special(g);
  c.expect(derived_special, "derived rule is special");
  const auto golden = formulas::three_three_example();
  c.expect(equal_in_sigma(derived, golden.rhs), "derived rule equals the shipped (3,3) formula");
  c.expect(equal_in_sigma(derived, golden.lhs), "derived rule equals 8(4,3,2)(5,6,1)");
  c.note(std::string("derived expansion has ") + std::to_string(derived.size()) + " terms, " +
         (derived == golden.rhs ? "term-wise equal" : "operator-equal") + " to the shipped formula");
}

struct Criterion {
  int number;
  const char* title;
  std::function<void(Checks&, std::mt19937_64&, const AcceptanceOptions&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "Relation identities", [](Checks& c, auto&, auto&) { relation_identities(c); }},
      {2, "Specialization soundness", [](Checks& c, auto& rng, auto&) { specialization_soundness(c, rng); }},
      {3, "Straightening soundness", [](Checks& c, auto& rng, auto&) { straightening_soundness(c, rng); }},
      {4, "Dimension table", [](Checks& c, auto&, const auto& o) { dimension_table(c, o.big); }},
      {5, "Involution-span table", [](Checks& c, auto&, const auto& o) { involution_table(c, o.big); }},
      {6, "Symmetric/antisymmetric structure", [](Checks& c, auto& rng, auto&) { symmetric_structure(c, rng); }},
      {7, "Transposition independence", [](Checks& c, auto&, auto&) { transposition_independence(c); }},
      {8, "Partial-trace coherence", [](Checks& c, auto&, auto&) { partial_trace_coherence(c); }},
      {9, "Pauli/matrix-unit expansion", [](Checks& c, auto& rng, auto&) { basis_expansions(c, rng); }},
      {10, "RSK/Schensted", [](Checks& c, auto&, auto&) { rsk_checks(c); }},
      {11, "Rule-derivation replay", [](Checks& c, auto&, auto&) { rule_derivation_replay(c); }},
  };
  return list;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> results;
  for (const auto& crit : criteria()) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), crit.number) == options.only.end())
      continue;
    std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(crit.number));
    Checks checks;
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    r.number = crit.number;
    r.title = crit.title;
    try {
      crit.run(checks, rng, options);
      r.passed = checks.passed();
      r.detail = checks.detail();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = checks.detail() + (checks.detail().empty() ? "" : "; ") + "error: " + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result_line(const CriterionResult& r) {
  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.2f s", r.seconds);
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << "  " << (r.number < 10 ? " " : "") << r.number << "  " << r.title << ": "
      << r.detail << "  (" << seconds << ")";
  return out.str();
}

std::string results_json(const std::vector<CriterionResult>& results) {
  Json list = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    list.push_back({{"criterion", r.number}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail},
                    {"seconds", r.seconds}});
  }
  return Json{{"passed", all}, {"criteria", std::move(list)}}.dump(2);
}

}  // namespace swapalg
