#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace msgeo {

struct SuiteResult {
  std::string name;
  bool pass = true;
  long checks = 0;       // individual assertions evaluated
  double max_dev = 0.0;  // largest numeric deviation across near/le checks
  double elapsed_s = 0.0;
  std::string detail;  // first failure message, empty when passing
};

// Runs the thirteen oracle-equivalence suites in a fixed order. full=false
// shrinks the sample counts (tolerances stay untouched); runtime budgets are
// enforced only at full scale.
std::vector<SuiteResult> run_selftest(bool full, uint64_t seed);

}  // namespace msgeo
