#pragma once

#include <string>
#include <vector>

namespace rsklip {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // measured values, counts, extrema
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

// Suite ids accepted by run_suite; the last entry, "all", runs the others in
// order and concatenates their checks.
const std::vector<std::string>& known_suites();

// Runs one named suite of self-contained checks. Unknown ids throw
// ValidationError. workers caps the threads handed to the scan/sweep calls.
SuiteReport run_suite(const std::string& suite, int workers = 1);

}  // namespace rsklip
