#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/checkers.hpp"
#include "ringlab/report.hpp"

namespace ringlab {

struct SuiteConfig {
  /// Checker ids; the single entry "all" selects every non-search checker,
  /// an empty list selects nothing.
  std::vector<std::string> theorems;
  std::int64_t budget = kUnlimitedBudget;  // per (theorem, ring) run; must be > 0
  int workers = 1;
  bool include_formal_identity = true;
  std::vector<const FiniteRing*> rings;
};

/// Builds each ring's certificate inventory once, runs the selected
/// checkers, and returns the reports ordered by (theorem id, ring name).
/// Two runs with the same config produce identical reports modulo
/// elapsed_ms, for any worker count. Throws std::invalid_argument on an
/// unknown theorem id or a non-positive budget.
std::vector<TheoremReport> run_suite(const SuiteConfig& config);

}  // namespace ringlab
