#ifndef INLIM_HARNESS_VERIFY_H_
#define INLIM_HARNESS_VERIFY_H_

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace inlim::harness {

struct CheckResult {
  std::string id;
  std::string name;
  bool passed = false;
  // Advisory checks are reported but do not fail the suite.
  bool advisory = false;
  std::string detail;
  double seconds = 0.0;
};

struct Check {
  std::string id;
  std::string name;
  bool advisory = false;
  std::function<CheckResult(unsigned threads)> run;
};

// Numbered acceptance criteria (AC1..AC11), each with its runtime budget.
const std::vector<Check>& acceptance_checks();
// Module-level properties (INV-*).
const std::vector<Check>& invariant_checks();

// Runs the checks in order; exceptions become failed results.
std::vector<CheckResult> run_checks(const std::vector<Check>& checks,
                                    unsigned threads = 1);

// "PASS AC1 name: detail (0.12 s)"; advisory failures print ADVISORY.
std::string format_check(const CheckResult& r);
bool suite_passed(std::span<const CheckResult> results);

}  // namespace inlim::harness

#endif  // INLIM_HARNESS_VERIFY_H_
