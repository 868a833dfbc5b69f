#include "swapalg/rewrite.hpp"

#include <algorithm>
#include <array>
#include <mutex>

#include "swapalg/error.hpp"
#include "swapalg/formulas.hpp"
#include "swapalg/oracle.hpp"

namespace swapalg {

namespace {

const char* const kLetters[] = {"a", "b", "c", "d", "e", "f"};

std::string cycle_text(const Cycle& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

void require(bool ok, const std::string& what) {
  if (!ok) fail(Errc::invalid_argument, what);
}

/// Checks that `cycle` (in any rotation) is a cycle of g.
void require_cycle_of(const Permutation& g, const Cycle& cycle) {
  require(!cycle.empty(), "empty cycle");
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const int a = cycle[i];
    require(a >= 1 && a <= g.degree(), "cycle point outside the degree");
    require(g(a) == cycle[(i + 1) % cycle.size()],
            cycle_text(cycle) + " is not a cycle of " + to_cycle_string(g));
  }
}

/// g with the points of `cycle` made fixed.
Permutation without_cycle(const Permutation& g, const Cycle& cycle) {
  auto img = g.images();
  for (int a : cycle) img[a - 1] = a;
  return Permutation::from_images(img);
}

/// rest * replacement_i * coefficient for every term of the replacement,
/// where the replacement acts on the points removed from the term.
AlgebraElement substitute(const Permutation& rest, const Rational& coefficient, const AlgebraElement& local) {
  AlgebraElement out(rest.degree());
  for (const auto& [h, c] : local.terms()) out.add_term(compose(rest, h), c * coefficient);
  return out;
}

std::vector<std::pair<std::string, int>> letter_map(const std::vector<int>& points) {
  std::vector<std::pair<std::string, int>> out;
  for (std::size_t i = 0; i < points.size(); ++i) out.emplace_back(kLetters[i], points[i]);
  return out;
}

Cycle rotate_to_min_first(Cycle c) {
  std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  return c;
}

Cycle rotate_to_min_last(Cycle c) {
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it + 1, c.end());
  return c;
}

bool is_increasing_3cycle(const Cycle& c) {
  const auto r = rotate_to_min_first(c);
  return r[1] < r[2];
}

std::vector<Cycle> nontrivial_cycles(const Permutation& g) {
  std::vector<Cycle> out;
  for (auto& c : cycle_decomposition(g).cycles)
    if (c.size() > 1) out.push_back(std::move(c));
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

/// Applies `rewrite` to the terms selected by `pick` until none is left.
/// Each round visits the selected terms in canonical order; terms created
/// during a round are picked up by the next one.
template <class Pick, class Rewrite>
void run_phase(AlgebraElement& current, RewriteTrace* trace, std::uint64_t& steps, std::uint64_t bound,
               Pick pick, Rewrite rewrite) {
  for (;;) {
    std::vector<Permutation> todo;
    for (const auto& [g, c] : current.terms())
      if (pick(g)) todo.push_back(g);
    if (todo.empty()) return;
    for (const auto& g : todo) {
      const Rational c = current.coefficient(g);
      if (sgn(c) == 0) continue;
      RuleApplication app = rewrite(Term{g, c});
      current.add_term(g, -c);
      current += app.replacement;
      if (++steps > bound) fail(Errc::internal, "rewrite step bound exceeded");
      if (trace) trace->steps.push_back(RewriteStep{std::move(app.rule), std::move(app.replacement)});
    }
  }
}

}  // namespace

std::string to_string(RuleName name) {
  switch (name) {
    case RuleName::Normalize3Cycle: return "Normalize3Cycle";
    case RuleName::Expand4Cycle: return "Expand4Cycle";
    case RuleName::SpliceLongCycle: return "SpliceLongCycle";
    case RuleName::Eliminate33Pair: return "Eliminate33Pair";
    case RuleName::StraightenTriple: return "StraightenTriple";
  }
  return "?";
}

AlgebraElement RewriteTrace::replay() const {
  AlgebraElement x = input;
  for (const auto& s : steps) {
    x.add_term(s.before().perm, -s.before().coefficient);
    x += s.after;
  }
  return x;
}

std::size_t RewriteTrace::first_unsound_step() const {
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& s = steps[k];
    const AlgebraElement before(s.before().perm, s.before().coefficient);
    if (!equal_as_operators(before, s.after)) return k;
  }
  return steps.size();
}

// --- rules --------------------------------------------------------------------

RuleApplication normalize_3cycle(const Term& term, const Cycle& cycle) {
  require(cycle.size() == 3, "normalize_3cycle needs a 3-cycle, got " + cycle_text(cycle));
  require_cycle_of(term.perm, cycle);
  require(!is_increasing_3cycle(cycle), cycle_text(cycle) + " is already normalized");
  const Cycle r = rotate_to_min_first(cycle);  // (a,c,b)
  const std::vector<int> points{r[0], r[2], r[1]};
  const auto local = formulas::instantiate(formulas::three_cycle_normalization().rhs, points, term.perm.degree());
  return {RewriteRule{RuleName::Normalize3Cycle, letter_map(points), term},
          substitute(without_cycle(term.perm, cycle), term.coefficient, local)};
}

RuleApplication expand_4cycle(const Term& term, const Cycle& cycle) {
  require(cycle.size() == 4, "expand_4cycle needs a 4-cycle, got " + cycle_text(cycle));
  require_cycle_of(term.perm, cycle);
  const auto local = formulas::instantiate(formulas::four_cycle_rule(), cycle, term.perm.degree()) * Rational(1, 2);
  return {RewriteRule{RuleName::Expand4Cycle, letter_map(cycle), term},
          substitute(without_cycle(term.perm, cycle), term.coefficient, local)};
}

RuleApplication splice_long_cycle(const Term& term, const Cycle& cycle) {
  require(cycle.size() >= 5, "splice_long_cycle needs length >= 5, got " + cycle_text(cycle));
  require_cycle_of(term.perm, cycle);
  const int n = term.perm.degree();
  const std::vector<int> head(cycle.begin(), cycle.begin() + 4);
  Cycle tail_cycle{cycle[0]};  // (a,A)
  tail_cycle.insert(tail_cycle.end(), cycle.begin() + 4, cycle.end());
  const auto tail = Permutation::from_cycles(n, {tail_cycle});
  const auto four = formulas::instantiate(formulas::four_cycle_rule(), head, n);
  AlgebraElement local(n);
  for (const auto& [h, c] : four.terms()) local.add_term(compose(tail, h), c / 2);

  auto letters = letter_map(head);
  for (std::size_t k = 4; k < cycle.size(); ++k) letters.emplace_back("A" + std::to_string(k - 3), cycle[k]);
  return {RewriteRule{RuleName::SpliceLongCycle, std::move(letters), term},
          substitute(without_cycle(term.perm, cycle), term.coefficient, local)};
}

RuleApplication eliminate_33_pair(const Term& term, const Cycle& first, const Cycle& second) {
  require(first.size() == 3 && second.size() == 3, "eliminate_33_pair needs two 3-cycles");
  require_cycle_of(term.perm, first);
  require_cycle_of(term.perm, second);
  for (int a : first)
    require(std::find(second.begin(), second.end(), a) == second.end(), "3-cycles are not disjoint");
  for (const auto& c : nontrivial_cycles(term.perm))
    require(c.size() <= 3, "eliminate_33_pair needs every cycle of length <= 3");

  Cycle efa = rotate_to_min_last(first);
  Cycle dcb = rotate_to_min_last(second);
  if (dcb[2] < efa[2]) std::swap(efa, dcb);
  // letters a..f
  const std::vector<int> points{efa[2], dcb[2], dcb[1], dcb[0], efa[0], efa[1]};
  const auto local = formulas::instantiate(formulas::three_three_rule(), points, term.perm.degree()) * Rational(1, 8);
  Permutation rest = without_cycle(without_cycle(term.perm, first), second);
  return {RewriteRule{RuleName::Eliminate33Pair, letter_map(points), term},
          substitute(rest, term.coefficient, local)};
}

RuleApplication straighten_triple(const Term& term, const std::array<int, 3>& pos) {
  const Permutation& s = term.perm;
  const int n = s.degree();
  require(pos[0] >= 1 && pos[0] < pos[1] && pos[1] < pos[2] && pos[2] <= n, "positions must satisfy 1 <= i < j < k <= n");
  require(s(pos[0]) > s(pos[1]) && s(pos[1]) > s(pos[2]), "positions do not hold a decreasing triple");
  AlgebraElement out(n);
  std::array<int, 3> order{0, 1, 2};
  const auto base = s.images();
  do {
    if (order == std::array<int, 3>{0, 1, 2}) continue;
    auto img = base;
    for (int t = 0; t < 3; ++t) img[pos[t] - 1] = base[pos[order[t]] - 1];
    // sign of the arrangement `order`
    int inversions = 0;
    for (int x = 0; x < 3; ++x)
      for (int y = x + 1; y < 3; ++y)
        if (order[x] > order[y]) ++inversions;
    const int eps = inversions % 2 == 0 ? 1 : -1;
    out.add_term(Permutation::from_images(img), term.coefficient * -eps);
  } while (std::next_permutation(order.begin(), order.end()));
  std::vector<std::pair<std::string, int>> letters{{"i", pos[0]}, {"j", pos[1]}, {"k", pos[2]}};
  return {RewriteRule{RuleName::StraightenTriple, std::move(letters), term}, std::move(out)};
}

// --- normal forms -------------------------------------------------------------

std::pair<AlgebraElement, RewriteTrace> specialize(const AlgebraElement& x, const SpecializeOptions& options) {
  RewriteTrace trace{x, {}, AlgebraElement(x.degree())};
  RewriteTrace* log = options.record_trace ? &trace : nullptr;
  AlgebraElement current = x;
  std::uint64_t steps = 0;
  const std::uint64_t bound = 64 * factorial(x.degree()) * std::max<std::uint64_t>(1, x.size());

  // Longest cycle first; among equal lengths the one with the smallest minimum.
  auto longest = [](const Permutation& g) {
    Cycle best;
    for (auto& c : cycle_decomposition(g).cycles)
      if (c.size() > best.size()) best = std::move(c);
    return best;
  };

  run_phase(current, log, steps, bound, [](const Permutation& g) { return longest_cycle(g) >= 5; },
            [&](const Term& t) { return splice_long_cycle(t, longest(t.perm)); });

  run_phase(current, log, steps, bound, [](const Permutation& g) { return longest_cycle(g) == 4; },
            [&](const Term& t) {
              for (const auto& c : cycle_decomposition(t.perm).cycles)
                if (c.size() == 4) return expand_4cycle(t, c);
              fail(Errc::internal, "4-cycle vanished");
            });

  auto three_cycles = [](const Permutation& g) {
    std::vector<Cycle> out;
    for (auto& c : cycle_decomposition(g).cycles)
      if (c.size() == 3) out.push_back(std::move(c));
    return out;
  };
  run_phase(current, log, steps, bound, [&](const Permutation& g) { return three_cycles(g).size() >= 2; },
            [&](const Term& t) {
              const auto cs = three_cycles(t.perm);
              return eliminate_33_pair(t, cs[0], cs[1]);
            });

  if (options.normalize_leftover) {
    run_phase(
        current, log, steps, bound,
        [&](const Permutation& g) {
          const auto cs = three_cycles(g);
          return cs.size() == 1 && !is_increasing_3cycle(cs[0]);
        },
        [&](const Term& t) { return normalize_3cycle(t, three_cycles(t.perm)[0]); });
  }

  trace.output = current;
  return {std::move(current), std::move(trace)};
}

std::pair<AlgebraElement, RewriteTrace> specialize(const AlgebraElement& x, bool normalize_leftover) {
  SpecializeOptions options;
  options.normalize_leftover = normalize_leftover;
  return specialize(x, options);
}

AlgebraElement symmetric_to_involutions(const AlgebraElement& x) {
  if (!is_symmetric(x)) fail(Errc::invalid_argument, "symmetric_to_involutions needs adjoint(x) == x");
  SpecializeOptions options;
  options.record_trace = false;
  // The operator of x is symmetric, so symmetrizing the special form keeps
  // it equal to x while pairing every 3-cycle term with its adjoint.
  AlgebraElement y = symmetric_part(specialize(x, options).first);
  const int n = x.degree();
  const auto& sum_rule = formulas::three_cycle_sum();

  AlgebraElement out(n);
  AlgebraElement pending = y;
  while (!pending.is_zero()) {
    const auto [g, c] = *pending.terms().begin();
    const Rational coefficient = c;
    const Permutation perm = g;
    Cycle three;
    for (auto& cyc : cycle_decomposition(perm).cycles)
      if (cyc.size() == 3) three = std::move(cyc);
    if (three.empty()) {
      out.add_term(perm, coefficient);
      pending.add_term(perm, -coefficient);
      continue;
    }
    const Permutation rest = without_cycle(perm, three);
    const Permutation partner = compose(rest, Permutation::from_cycles(n, {{three[0], three[2], three[1]}}));
    if (pending.coefficient(partner) != coefficient)
      fail(Errc::internal, "unpaired 3-cycle term " + to_cycle_string(perm));
    pending.add_term(perm, -coefficient);
    pending.add_term(partner, -coefficient);
    // (a,b,c)+(a,c,b) = (a,b)+(a,c)+(b,c)-1
    const std::vector<int> points{three[0], three[1], three[2]};
    out += substitute(rest, coefficient, formulas::instantiate(sum_rule.rhs, points, n));
  }
  for (const auto& [g, c] : out.terms())
    if (!is_involution(g)) fail(Errc::internal, "non-involution left in symmetric form");
  return out;
}

std::pair<AlgebraElement, RewriteTrace> straighten_3good(const AlgebraElement& x) {
  RewriteTrace trace{x, {}, AlgebraElement(x.degree())};
  AlgebraElement current = x;
  std::array<int, 3> pos{};
  // Every replacement is lexicographically smaller than the term it
  // replaces, so a single downward sweep suffices.
  auto& terms = current.terms();
  auto it = terms.end();
  while (it != terms.begin()) {
    --it;
    if (!find_decreasing_triple(it->first, pos)) continue;
    const Term t{it->first, it->second};
    RuleApplication app = straighten_triple(t, pos);
    current.add_term(t.perm, -t.coefficient);
    current += app.replacement;
    trace.steps.push_back(RewriteStep{std::move(app.rule), std::move(app.replacement)});
    it = terms.lower_bound(t.perm);
  }
  trace.output = current;
  return {std::move(current), std::move(trace)};
}

std::pair<AlgebraElement, RewriteTrace> straighten_3good(const Permutation& p) {
  return straighten_3good(AlgebraElement(p));
}

// --- memoized straightening -------------------------------------------------

std::shared_ptr<const StraighteningCache::Expansion> StraighteningCache::lookup(const Permutation& p) const {
  std::shared_lock lock(mutex_);
  auto it = cache_.find(p);
  return it == cache_.end() ? nullptr : it->second;
}

std::shared_ptr<const StraighteningCache::Expansion> StraighteningCache::insert(const Permutation& p, Expansion value) {
  auto entry = std::make_shared<const Expansion>(std::move(value));
  std::unique_lock lock(mutex_);
  return cache_.try_emplace(p, std::move(entry)).first->second;
}

std::shared_ptr<const StraighteningCache::Expansion> StraighteningCache::expand(const Permutation& p) {
  if (auto hit = lookup(p)) return hit;
  std::vector<Permutation> stack{p};
  std::array<int, 3> pos{};
  while (!stack.empty()) {
    const Permutation s = stack.back();
    if (lookup(s)) {
      stack.pop_back();
      continue;
    }
    if (!find_decreasing_triple(s, pos)) {
      insert(s, Expansion{{s, 1}});
      stack.pop_back();
      continue;
    }
    const auto app = straighten_triple(Term{s, Rational(1)}, pos);
    bool ready = true;
    std::vector<std::pair<std::shared_ptr<const Expansion>, std::int64_t>> parts;
    for (const auto& [child, c] : app.replacement.terms()) {
      auto e = lookup(child);
      if (!e) {
        stack.push_back(child);
        ready = false;
      } else {
        parts.emplace_back(std::move(e), c.get_num().get_si());
      }
    }
    if (!ready) continue;
    std::map<Permutation, std::int64_t> sum;
    for (const auto& [e, c] : parts)
      for (const auto& [g, v] : *e) {
        std::int64_t prod = 0;
        if (__builtin_mul_overflow(c, v, &prod) || __builtin_add_overflow(sum[g], prod, &sum[g]))
          fail(Errc::internal, "straightening coefficient overflow");
      }
    Expansion value;
    for (const auto& [g, v] : sum)
      if (v != 0) value.emplace_back(g, v);
    insert(s, std::move(value));
    stack.pop_back();
  }
  return lookup(p);
}

AlgebraElement StraighteningCache::expand_element(const Permutation& p) {
  AlgebraElement out(p.degree());
  for (const auto& [g, v] : *expand(p)) out.add_term(g, Rational(v));
  return out;
}

std::size_t StraighteningCache::size() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

void StraighteningCache::clear() {
  std::unique_lock lock(mutex_);
  cache_.clear();
}

StraighteningCache& shared_straightening_cache() {
  static StraighteningCache cache;
  return cache;
}

}  // namespace swapalg
