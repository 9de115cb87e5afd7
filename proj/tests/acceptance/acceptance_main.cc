// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is nonzero when a non-advisory criterion fails.
#include <iostream>
#include <string>

#include "inlim/harness/verify.h"

int main(int argc, char** argv) {
  unsigned threads = argc > 1 ? static_cast<unsigned>(std::stoul(argv[1])) : 1;
  using namespace inlim::harness;
  std::vector<CheckResult> results;
  for (const Check& check : acceptance_checks()) {
    std::vector<CheckResult> one = run_checks({check}, threads);
    std::cout << format_check(one.front()) << std::endl;
    results.push_back(one.front());
  }
  bool ok = suite_passed(results);
  std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILED")
            << std::endl;
  return ok ? 0 : 1;
}
