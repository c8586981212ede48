#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ringlab/inverses.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// One (a,b,c) triple together with its unique inverse witness.
struct CertEntry {
  Elem a = 0, b = 0, c = 0, x = 0;
};

struct DrazinEntry {
  bool exists = false;
  Elem witness = 0;
  int index = 0;
};

/// The full certificate tables of one ring: for every (a,b,c) the
/// annihilator (b,c)-inverse and the (b,c)-inverse when they exist, plus
/// the per-element Drazin table. Built once per ring by triple scan and
/// shared read-only by the checkers.
class CertificateInventory {
 public:
  static CertificateInventory build(const FiniteRing& r, int workers = 1);

  const FiniteRing& ring() const { return *ring_; }

  const std::vector<CertEntry>& ann() const { return ann_; }  // ordered by (a,b,c)
  const std::vector<CertEntry>& bc() const { return bc_; }

  std::optional<Elem> ann_witness(Elem a, Elem b, Elem c) const;
  std::optional<Elem> bc_witness(Elem a, Elem b, Elem c) const;

  const DrazinEntry& drazin_of(Elem a) const { return drazin_[static_cast<std::size_t>(a)]; }

  /// Entries grouped by the element being inverted.
  std::vector<const CertEntry*> ann_entries_for(Elem a) const;
  std::vector<const CertEntry*> bc_entries_for(Elem a) const;

  /// Violations surfaced by the underlying solvers during the build. Empty
  /// on every valid ring; a non-empty list is itself a reportable finding.
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  const FiniteRing* ring_ = nullptr;
  std::vector<CertEntry> ann_;
  std::vector<CertEntry> bc_;
  std::vector<Elem> ann_w_;  // dense (a,b,c) -> witness, -1 when absent
  std::vector<Elem> bc_w_;
  std::vector<DrazinEntry> drazin_;
  std::vector<Violation> violations_;

  std::size_t key(Elem a, Elem b, Elem c) const;
};

}  // namespace ringlab
