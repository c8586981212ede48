#include "ringlab/inventory.hpp"

#include <stdexcept>

#include "ringlab/engine.hpp"
#include "ringlab/subsets.hpp"

namespace ringlab {

std::size_t CertificateInventory::key(Elem a, Elem b, Elem c) const {
  const auto n = static_cast<std::size_t>(ring_->size());
  return (static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)) * n +
         static_cast<std::size_t>(c);
}

CertificateInventory CertificateInventory::build(const FiniteRing& r, int workers) {
  CertificateInventory inv;
  inv.ring_ = &r;
  const auto n = static_cast<std::int64_t>(r.size());
  const std::int64_t total = n * n * n;
  if (total > (std::int64_t{1} << 26))
    throw std::invalid_argument("inventory build: ring too large for a triple scan");

  inv.ann_w_.assign(static_cast<std::size_t>(total), -1);
  inv.bc_w_.assign(static_cast<std::size_t>(total), -1);

  // Warm the mask caches before the parallel region.
  left_annihilator(r, 0);
  right_annihilator(r, 0);
  left_multiples(r, 0);
  right_multiples(r, 0);

  struct Slot {
    std::vector<CertEntry> ann, bc;
    std::vector<Violation> violations;
  };
  chunked_scan<Slot>(
      total, std::int64_t{1} << 62, workers,
      [&](std::int64_t lo, std::int64_t hi, Slot& slot) {
        for (std::int64_t idx = lo; idx < hi; ++idx) {
          const Elem a = static_cast<Elem>(idx / (n * n));
          const Elem b = static_cast<Elem>((idx / n) % n);
          const Elem c = static_cast<Elem>(idx % n);
          SolveResult ann = ann_bc_inverse(r, a, b, c);
          if (ann.found()) slot.ann.push_back({a, b, c, ann.cert->witness});
          for (auto& v : ann.violations) slot.violations.push_back(std::move(v));
          SolveResult bc = bc_inverse(r, a, b, c);
          if (bc.found()) slot.bc.push_back({a, b, c, bc.cert->witness});
          for (auto& v : bc.violations) slot.violations.push_back(std::move(v));
        }
      },
      [&](Slot&& slot) {
        for (const auto& e : slot.ann) {
          inv.ann_w_[inv.key(e.a, e.b, e.c)] = e.x;
          inv.ann_.push_back(e);
        }
        for (const auto& e : slot.bc) {
          inv.bc_w_[inv.key(e.a, e.b, e.c)] = e.x;
          inv.bc_.push_back(e);
        }
        for (auto& v : slot.violations) inv.violations_.push_back(std::move(v));
      });

  inv.drazin_.resize(static_cast<std::size_t>(n));
  for (Elem a = 0; a < n; ++a) {
    SolveResult dz = drazin(r, a);
    auto& entry = inv.drazin_[static_cast<std::size_t>(a)];
    if (dz.found()) {
      entry.exists = true;
      entry.witness = dz.cert->witness;
      entry.index = *dz.cert->drazin_index;
    }
    for (auto& v : dz.violations) inv.violations_.push_back(std::move(v));
  }
  return inv;
}

std::optional<Elem> CertificateInventory::ann_witness(Elem a, Elem b, Elem c) const {
  const Elem w = ann_w_[key(a, b, c)];
  if (w < 0) return std::nullopt;
  return w;
}

std::optional<Elem> CertificateInventory::bc_witness(Elem a, Elem b, Elem c) const {
  const Elem w = bc_w_[key(a, b, c)];
  if (w < 0) return std::nullopt;
  return w;
}

std::vector<const CertEntry*> CertificateInventory::ann_entries_for(Elem a) const {
  std::vector<const CertEntry*> out;
  for (const auto& e : ann_)
    if (e.a == a) out.push_back(&e);
  return out;
}

std::vector<const CertEntry*> CertificateInventory::bc_entries_for(Elem a) const {
  std::vector<const CertEntry*> out;
  for (const auto& e : bc_)
    if (e.a == a) out.push_back(&e);
  return out;
}

}  // namespace ringlab
