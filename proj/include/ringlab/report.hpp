#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/inverses.hpp"

namespace ringlab {

/// One falsifying (or, for searches, found) variable assignment.
struct Counterexample {
  std::vector<std::pair<std::string, std::string>> vars;  // symbol -> label, ordered
  std::string failed_clause;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// Lexicographic order on (failed_clause, vars).
bool counterexample_less(const Counterexample& a, const Counterexample& b);

enum class CheckStatus { kPass, kFail, kSkipped };

struct TheoremReport {
  std::string theorem;
  std::string ring;
  std::int64_t tuples_scanned = 0;
  std::vector<Counterexample> counterexamples;
  CheckStatus status = CheckStatus::kPass;
  std::string skip_reason;  // non-empty iff status == kSkipped
  std::int64_t elapsed_ms = 0;

  bool passed() const { return status == CheckStatus::kPass; }

  /// status = skipped(reason) when a budget stop happened, else
  /// pass ⟺ counterexamples empty. Sorts counterexamples lexicographically.
  void finalize(bool budget_hit);

  std::string to_json() const;
  static TheoremReport from_json(const std::string& text);
};

std::string status_string(const TheoremReport& r);

/// Human-readable markdown table, grouped by ring.
std::string markdown_summary(const std::vector<TheoremReport>& reports);

Counterexample violation_to_counterexample(const Violation& v);

}  // namespace ringlab
