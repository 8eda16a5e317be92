// Expands theorem tags over a parameter range into verification tasks and
// runs them on an OpenMP worker pool.  Results come back sorted, so output
// is independent of scheduling.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qcong/congruence.hpp"

namespace qcong {

struct SweepConfig {
  std::vector<std::string> theorems;
  long long lo = 1;
  long long hi = 1;
  int jobs = 1;
  bool dump_remainders = false;
  // Per-task cap on dense polynomial terms; 0 disables the guard.
  std::size_t max_degree = 250000;
};

struct SweepResult {
  // 0: everything holds or is skipped; 1: at least one fails; 2: bad config.
  int exit_code = 0;
  std::string error;
  std::vector<VerificationRecord> records;
};

// Tag vocabulary accepted by SweepConfig::theorems, in canonical order.
const std::vector<std::string>& known_tags();

SweepResult run_sweep(const SweepConfig& cfg);

}  // namespace qcong
