#pragma once

#include <cstdint>
#include <string>

#include "conmod_cli/commands.hpp"

namespace conmod::cli {

struct SelftestOptions {
  std::uint64_t seed = 1;
  std::size_t count = 40;
  // Name of one identity whose computed side is perturbed by one (test builds of the report only).
  std::string inject_fault;
};

// Runs the identity suite on the fixed corpus plus count seeded (algebra, module) cases.
// results: per-identity check counts, per-case summaries, failures. Exit code 1 on any
// violated identity, 4 when a case could not be evaluated.
Report run_selftest(const SelftestOptions& options);

// Identity names the suite checks, in report order.
const std::vector<std::string>& selftest_identities();

}  // namespace conmod::cli
