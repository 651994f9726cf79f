#pragma once

#include <string>
#include <vector>

#include "semico/core.hpp"

namespace semico {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;  ///< What disagreed, when the check failed.
};

struct VerificationReport {
  std::vector<Check> checks;
  /// Checks that were not run, with the bound that prevented them.
  std::vector<std::string> skipped;

  bool all_passed() const;
  std::size_t failures() const;
};

/// Runs every fast route on `t` and compares it with the brute-force
/// oracle. Throws NotSemicoherentError for invalid tables and
/// CapacityError above the oracle's size bounds.
VerificationReport verify_system(const TruthTable& t,
                                 const Limits& limits = {});

}  // namespace semico
