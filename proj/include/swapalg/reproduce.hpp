#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace swapalg {

struct AcceptanceOptions {
  /// Adds the degree 8 Catalan checks and the degree 9 and 10 involution ranks.
  bool big = false;
  /// Criteria to run (1..11); empty runs all of them.
  std::vector<int> only;
  std::uint64_t seed = 20240611;
};

struct CriterionResult {
  int number = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 11;

/// Runs the acceptance checks in order, calling `on_result` after each one.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  4  Dimension table ...  (1.23 s)"
std::string format_result_line(const CriterionResult& result);
std::string results_json(const std::vector<CriterionResult>& results);

}  // namespace swapalg
