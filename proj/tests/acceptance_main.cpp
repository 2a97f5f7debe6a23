// Runs each built-in example check once and prints one line per check.
// Exit status is zero only when every check passes.
#include <algorithm>
#include <cstdio>
#include <thread>

#include "clones/verification.hpp"

int main() {
  clones::VerifyOptions options;
  const unsigned hw = std::thread::hardware_concurrency();
  options.threads = static_cast<int>(std::clamp(hw, 1u, 8u));
  const std::vector<clones::CheckResult> results = clones::run_example_checks(options);

  bool all_passed = true;
  for (const clones::CheckResult& r : results) {
    if (r.passed) {
      std::printf("PASS %s\n", r.name.c_str());
    } else {
      std::printf("FAIL %s: %s\n", r.name.c_str(), r.details.c_str());
      all_passed = false;
    }
  }
  const std::size_t expected = clones::example_check_names().size();
  if (results.size() != expected) {
    std::printf("FAIL harness: ran %zu of %zu checks\n", results.size(), expected);
    return 1;
  }
  std::printf("%zu checks, %s\n", results.size(), all_passed ? "all passed" : "FAILURES above");
  return all_passed ? 0 : 1;
}
