#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ringlab/inventory.hpp"
#include "ringlab/report.hpp"

namespace ringlab {

inline constexpr std::int64_t kUnlimitedBudget = std::int64_t{1} << 62;

struct CheckContext {
  const FiniteRing* ring = nullptr;
  const CertificateInventory* inventory = nullptr;
  int workers = 1;
  std::int64_t budget = kUnlimitedBudget;  // max tuples this checker may scan
  bool include_formal_identity = true;     // y ranges over R^1 vs R
  std::int64_t chunk = std::int64_t{1} << 13;
};

// Every checker enumerates all instances satisfying its hypotheses and
// asserts its conclusion; biconditionals are asserted in both directions
// with direction-tagged clause ids.

TheoremReport check_uniqueness(const CheckContext& cx);
TheoremReport check_sided_composition(const CheckContext& cx);
TheoremReport check_sided_propositions(const CheckContext& cx);
TheoremReport check_faithful_uniqueness(const CheckContext& cx);
TheoremReport check_drazin_regularization(const CheckContext& cx);
TheoremReport check_drazin_ann_equivalence(const CheckContext& cx);
TheoremReport check_intertwining_ann(const CheckContext& cx);
TheoremReport check_intertwining_bc(const CheckContext& cx);
TheoremReport check_centralizer_sufficiency(const CheckContext& cx);

enum class CertFlavor { kAnn, kBc };
TheoremReport check_intertwine_variants(const CheckContext& cx, CertFlavor flavor);
TheoremReport check_absorption(const CheckContext& cx);
TheoremReport check_reverse_order(const CheckContext& cx, CertFlavor flavor);
TheoremReport check_cline(const CheckContext& cx);

enum class SearchTarget {
  kNonUniqueSided,   // triples with more than one lann/rann solution
  kNonRegularSided,  // one-sided solutions with x·a·x != x
  kReverseOrderGap,  // reverse order law holds but no sufficiency branch applies
};
TheoremReport search_counterexamples(const CheckContext& cx, SearchTarget target);

struct CheckerInfo {
  std::string id;
  std::function<TheoremReport(const CheckContext&)> run;
  bool is_search = false;
};

/// Stable registry; "all" in a theorem filter selects every non-search id.
const std::vector<CheckerInfo>& all_checkers();

}  // namespace ringlab
