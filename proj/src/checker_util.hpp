#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/checkers.hpp"
#include "ringlab/engine.hpp"
#include "ringlab/inventory.hpp"
#include "ringlab/report.hpp"
#include "ringlab/subsets.hpp"

namespace ringlab {
namespace detail {

inline constexpr std::size_t kPerChunkCxCap = 8;
inline constexpr std::size_t kReportCxCap = 64;

/// Per-chunk counterexample collector, capped so a badly false statement
/// cannot blow up memory. The cap applies identically on the serial and
/// parallel paths.
struct CxSlot {
  std::vector<Counterexample> cxs;
  void add(Counterexample cx) {
    if (cxs.size() < kPerChunkCxCap) cxs.push_back(std::move(cx));
  }
};

/// Drives one checker: a sequence of linearized sub-scans sharing a tuple
/// budget. Each sub-scan visits the deterministic prefix of its space that
/// fits in the remaining budget; results are identical for any worker count.
class CheckRun {
 public:
  CheckRun(const CheckContext& cx, std::string theorem_id)
      : cx_(cx), start_(std::chrono::steady_clock::now()), remaining_(cx.budget) {
    rep_.theorem = std::move(theorem_id);
    rep_.ring = cx.ring->name();
  }

  const CheckContext& context() const { return cx_; }
  const FiniteRing& ring() const { return *cx_.ring; }
  const CertificateInventory& inventory() const { return *cx_.inventory; }

  /// body(idx, slot) is called for every index in the scanned prefix of
  /// [0, total).
  template <typename Body>
  void scan(std::int64_t total, Body&& body) {
    const std::int64_t scanned = chunked_scan<CxSlot>(
        total, remaining_, cx_.workers,
        [&](std::int64_t lo, std::int64_t hi, CxSlot& slot) {
          for (std::int64_t idx = lo; idx < hi; ++idx) body(idx, slot);
        },
        [&](CxSlot&& slot) {
          for (auto& cx : slot.cxs)
            if (rep_.counterexamples.size() < kReportCxCap)
              rep_.counterexamples.push_back(std::move(cx));
        },
        cx_.chunk);
    rep_.tuples_scanned += scanned;
    remaining_ -= scanned;
    if (scanned < total) budget_hit_ = true;
  }

  void add_violations(const std::vector<Violation>& violations) {
    for (const auto& v : violations)
      if (rep_.counterexamples.size() < kReportCxCap)
        rep_.counterexamples.push_back(violation_to_counterexample(v));
  }

  TheoremReport finish() {
    rep_.finalize(budget_hit_);
    rep_.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
    return std::move(rep_);
  }

 private:
  const CheckContext& cx_;
  std::chrono::steady_clock::time_point start_;
  TheoremReport rep_;
  std::int64_t remaining_;
  bool budget_hit_ = false;
};

using Vars = std::vector<std::pair<std::string, std::string>>;

inline Counterexample cx_of(const FiniteRing& r, std::string clause,
                            std::initializer_list<std::pair<const char*, Elem>> items) {
  Counterexample cx;
  cx.failed_clause = std::move(clause);
  cx.vars.reserve(items.size());
  for (const auto& [sym, e] : items) cx.vars.emplace_back(sym, r.label(e));
  return cx;
}

/// The five defining conditions of the annihilator (b,c)-inverse.
inline bool satisfies_ann(const FiniteRing& r, Elem a, Elem b, Elem c, Elem x) {
  return r.mul3(x, a, x) == x && r.mul3(x, a, b) == b && r.mul3(c, a, x) == c &&
         left_annihilator(r, b).subset_of(left_annihilator(r, x)) &&
         right_annihilator(r, c).subset_of(right_annihilator(r, x));
}

/// The four (b,c)-inverse conditions in the multiple-set form.
inline bool satisfies_bc(const FiniteRing& r, Elem a, Elem b, Elem c, Elem x) {
  return r.mul3(x, a, b) == b && r.mul3(c, a, x) == c &&
         right_multiples(r, b).test(x) && left_multiples(r, c).test(x);
}

inline bool is_lann_solution(const FiniteRing& r, Elem a, Elem b, Elem c, Elem x) {
  return r.mul3(x, a, b) == b &&
         right_annihilator(r, c).subset_of(right_annihilator(r, x));
}

inline bool is_rann_solution(const FiniteRing& r, Elem a, Elem b, Elem c, Elem y) {
  return r.mul3(c, a, y) == c &&
         left_annihilator(r, b).subset_of(left_annihilator(r, y));
}

/// Certificate entry with the products the intertwining scans reuse.
struct EntryExt {
  Elem a, b, c, x;
  Elem ab, ca, ax, xa;  // a·b, c·a, a·x, x·a
};

inline std::vector<EntryExt> extend_entries(const FiniteRing& r,
                                            const std::vector<CertEntry>& entries) {
  std::vector<EntryExt> out;
  out.reserve(entries.size());
  for (const auto& e : entries)
    out.push_back({e.a, e.b, e.c, e.x, r.mul(e.a, e.b), r.mul(e.c, e.a),
                   r.mul(e.a, e.x), r.mul(e.x, e.a)});
  return out;
}

/// One one-sided solution instance (a, b, c, x).
struct SidedInst {
  Elem a, b, c, x;
  bool regular;
};

std::vector<SidedInst> all_sided_ann_instances(const FiniteRing& r, AnnSide side);
std::vector<SidedInst> all_sided_bc_instances(const FiniteRing& r, Side side);

/// Number of y values scanned: |R| plus the formal identity when requested
/// and the ring has none.
inline int y_range(const CheckContext& cx) {
  const bool formal = cx.include_formal_identity && !cx.ring->is_unital();
  return cx.ring->size() + (formal ? 1 : 0);
}

}  // namespace detail
}  // namespace ringlab
