#pragma once

#include <string>
#include <vector>

namespace clones {

/// Outcome of one named example check.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string details;
};

struct VerifyOptions {
  std::string filter;           // run only checks whose name contains this
  int threads = 1;              // parallelism for exhaustive slice scans
  std::string corrupt_builtin;  // test mode: substitute a wrong rig for this
                                // builtin name so dependent checks fail with
                                // a visible diff ("bool2" supported)
};

/// Names of the built-in example checks, in execution order.
std::vector<std::string> example_check_names();

/// Runs the example checks matching the filter. Exceptions inside a check are
/// reported as failures, never thrown.
std::vector<CheckResult> run_example_checks(const VerifyOptions& options = {});

}  // namespace clones
