#include "ringlab/suite.hpp"

#include <algorithm>
#include <stdexcept>

#include "ringlab/inventory.hpp"

namespace ringlab {

std::vector<TheoremReport> run_suite(const SuiteConfig& config) {
  if (config.budget <= 0) throw std::invalid_argument("suite budget must be > 0");

  const auto& registry = all_checkers();
  std::vector<const CheckerInfo*> selected;
  for (const auto& id : config.theorems) {
    if (id == "all") {
      for (const auto& info : registry)
        if (!info.is_search) selected.push_back(&info);
      continue;
    }
    const auto it =
        std::find_if(registry.begin(), registry.end(),
                     [&](const CheckerInfo& info) { return info.id == id; });
    if (it == registry.end())
      throw std::invalid_argument("unknown theorem id: " + id);
    selected.push_back(&*it);
  }
  std::sort(selected.begin(), selected.end(),
            [](const CheckerInfo* a, const CheckerInfo* b) { return a->id < b->id; });
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

  std::vector<TheoremReport> reports;
  for (const FiniteRing* ring : config.rings) {
    if (selected.empty()) break;
    const CertificateInventory inventory =
        CertificateInventory::build(*ring, config.workers);
    if (!inventory.violations().empty()) {
      // A solver-level falsification during the build is itself a finding.
      TheoremReport rep;
      rep.theorem = "certificate-inventory";
      rep.ring = ring->name();
      for (const auto& v : inventory.violations())
        rep.counterexamples.push_back(violation_to_counterexample(v));
      rep.finalize(false);
      reports.push_back(std::move(rep));
    }
    CheckContext cx;
    cx.ring = ring;
    cx.inventory = &inventory;
    cx.workers = config.workers;
    cx.budget = config.budget;
    cx.include_formal_identity = config.include_formal_identity;
    for (const CheckerInfo* info : selected) reports.push_back(info->run(cx));
  }

  std::stable_sort(reports.begin(), reports.end(),
                   [](const TheoremReport& a, const TheoremReport& b) {
                     if (a.theorem != b.theorem) return a.theorem < b.theorem;
                     return a.ring < b.ring;
                   });
  return reports;
}

}  // namespace ringlab
