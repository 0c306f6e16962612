// Acceptance gate: one pass/fail line per criterion, exit 0 only if every
// requested criterion actually passes. Criteria 6 and 7 fail by design on
// documented counterexamples (tiny-x interval bounds, the gap before 127);
// they stay red here so nobody mistakes a documented failure for a pass.
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

#include "zrl/report.hpp"

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
      if (only < 1 || only > zrl::kCriterionCount) {
        std::cerr << "criterion must be 1.." << zrl::kCriterionCount << "\n";
        return 2;
      }
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }

  zrl::ReportEnv env;
  bool all_pass = true;
  int lo = only ? only : 1;
  int hi = only ? only : zrl::kCriterionCount;
  for (int id = lo; id <= hi; ++id) {
    auto r = zrl::run_criterion(id, env);
    std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id
              << " (" << r.name << ")";
    if (!r.pass && !r.expected_pass) std::cout << " [documented failure]";
    std::cout << "\n    " << r.detail << "\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}
