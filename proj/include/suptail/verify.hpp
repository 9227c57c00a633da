#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "suptail/bounds.hpp"

namespace suptail {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // failing configuration, or a short summary
  double seconds = 0.0;
};

// Runs every module invariant at its stated scale against the active
// parameter set. Deterministic given the seed. The CLI `verify` command
// prints these and exits nonzero if any fails.
std::vector<CheckResult> run_verify_suite(std::uint64_t seed,
                                          const BoundParams& params,
                                          unsigned threads = 1);

}  // namespace suptail
