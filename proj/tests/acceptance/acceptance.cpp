// Runs every acceptance criterion and prints one line per criterion.
//   acceptance [--big] [N ...]

#include <cstdlib>
#include <iostream>
#include <string>

#include "swapalg/reproduce.hpp"

int main(int argc, char** argv) {
  swapalg::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--big")
      options.big = true;
    else
      options.only.push_back(std::atoi(arg.c_str()));
  }
  int failed = 0;
  const auto results = swapalg::run_acceptance(options, [&](const swapalg::CriterionResult& r) {
    std::cout << swapalg::format_result_line(r) << std::endl;
    if (!r.passed) ++failed;
  });
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
