#pragma once

#include <ostream>

namespace chromzeta {

struct SelftestSummary {
  int passed = 0;
  int failed = 0;
  bool ok() const noexcept { return failed == 0; }
};

/// Quick invariant suite bundled with the library (a few seconds). Writes one
/// PASS/FAIL line per check.
SelftestSummary run_selftest(std::ostream& out);

}  // namespace chromzeta
