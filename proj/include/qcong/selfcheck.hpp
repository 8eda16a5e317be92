// Built-in diagnostic suite: pinned example values plus randomized algebraic
// property checks, runnable from the CLI on any install.  Random draws use a
// fixed seed, so a pass or failure is reproducible.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcong {

struct CheckResult {
  std::string name;
  bool ok;
};

// Runs every check and returns one result per named check.
std::vector<CheckResult> run_selfchecks();

// Prints one line per check plus a summary; true iff everything passed.
bool run_selftest(std::ostream& os);

}  // namespace qcong
