#pragma once

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "swapalg/algebra.hpp"
#include "swapalg/permutation.hpp"

namespace swapalg {

enum class RuleName {
  Normalize3Cycle,
  Expand4Cycle,
  SpliceLongCycle,
  Eliminate33Pair,
  StraightenTriple,
};

std::string to_string(RuleName name);

struct Term {
  Permutation perm;
  Rational coefficient;
};

/// A rule instance: which rule, how its letters were bound to points, and
/// the term it rewrote.
struct RewriteRule {
  RuleName name;
  std::vector<std::pair<std::string, int>> letter_map;
  Term applied_to;
};

/// One rewrite: `rule.applied_to` is replaced by `after`.
struct RewriteStep {
  RewriteRule rule;
  AlgebraElement after;

  const Term& before() const { return rule.applied_to; }
};

struct RewriteTrace {
  AlgebraElement input;
  std::vector<RewriteStep> steps;
  AlgebraElement output;

  /// Applies every step to `input` in order.
  AlgebraElement replay() const;
  /// Index of the first step whose replacement is not operator-equal to the
  /// term it replaces, or steps.size() when all of them are.
  std::size_t first_unsound_step() const;
};

/// Result of one rule application: the replacement for the whole term.
struct RuleApplication {
  RewriteRule rule;
  AlgebraElement replacement;
};

// Each rule takes the term and a cycle of its permutation written in the
// rotation that fixes the letter assignment, and returns an element equal
// to the term in the swap algebra. Violated preconditions raise
// Error(invalid_argument).

/// (a,c,b) -> -(a,b,c)+(a,b)+(a,c)+(b,c)-1 for a 3-cycle whose minimum-first
/// form is decreasing after the minimum.
RuleApplication normalize_3cycle(const Term& term, const Cycle& cycle);
/// 2(a,b,c,d) -> ten terms with cycles of length <= 3.
RuleApplication expand_4cycle(const Term& term, const Cycle& cycle);
/// (a,b,c,d,A) = (a,A)(a,b,c,d); the 4-cycle rule is applied to the right
/// factor and every resulting cycle is shorter than the original.
RuleApplication splice_long_cycle(const Term& term, const Cycle& cycle);
/// 8(d,c,b)(e,f,a) -> special permutations. Each 3-cycle is rotated to end
/// at its minimum; the one holding the smaller minimum plays (e,f,a).
/// Other cycles of the term must have length <= 3.
RuleApplication eliminate_33_pair(const Term& term, const Cycle& first, const Cycle& second);
/// The antisymmetrizer on positions i<j<k of a decreasing triple:
/// sigma = -sum_{tau != 1} sign(tau) sigma tau, all lexicographically smaller.
RuleApplication straighten_triple(const Term& term, const std::array<int, 3>& positions);

struct SpecializeOptions {
  bool normalize_leftover = false;
  bool record_trace = true;
};

/// Rewrites x into special permutations: long cycles (longest first), then
/// 4-cycles, then pairs of 3-cycles (two smallest minima), then optionally
/// the remaining 3-cycle into increasing form.
std::pair<AlgebraElement, RewriteTrace> specialize(const AlgebraElement& x, const SpecializeOptions& options = {});
std::pair<AlgebraElement, RewriteTrace> specialize(const AlgebraElement& x, bool normalize_leftover);

/// Rewrites a symmetric element into involutions. Raises invalid_argument
/// when adjoint(x) != x.
AlgebraElement symmetric_to_involutions(const AlgebraElement& x);

/// Rewrites into 3-good permutations with integer coefficients. The
/// lexicographically largest bad term is straightened first at its
/// leftmost decreasing triple.
std::pair<AlgebraElement, RewriteTrace> straighten_3good(const AlgebraElement& x);
std::pair<AlgebraElement, RewriteTrace> straighten_3good(const Permutation& p);

/// Memoized straightening over the lexicographic order. Entries are
/// computed once and never modified; concurrent callers may race to fill
/// an entry, in which case the first insertion wins and both values agree.
class StraighteningCache {
public:
  using Expansion = std::vector<std::pair<Permutation, std::int64_t>>;

  std::shared_ptr<const Expansion> expand(const Permutation& p);
  AlgebraElement expand_element(const Permutation& p);

  std::size_t size() const;
  void clear();

private:
  std::shared_ptr<const Expansion> lookup(const Permutation& p) const;
  std::shared_ptr<const Expansion> insert(const Permutation& p, Expansion value);

  mutable std::shared_mutex mutex_;
  std::unordered_map<Permutation, std::shared_ptr<const Expansion>> cache_;
};

StraighteningCache& shared_straightening_cache();

}  // namespace swapalg
