#pragma once

#include <bit>
#include <cstdint>
#include <mutex>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// Fixed-width bitset over the elements of one ring. Subset, equality and
/// intersection are plain word-wise operations.
class SubsetMask {
 public:
  SubsetMask() = default;
  explicit SubsetMask(int universe)
      : n_(universe), w_(static_cast<std::size_t>((universe + 63) / 64), 0) {}

  int universe() const { return n_; }

  void set(Elem i) { w_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(Elem i) const {
    return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1;
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  /// this ⊆ other
  bool subset_of(const SubsetMask& other) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~other.w_[i]) return false;
    return true;
  }

  friend bool operator==(const SubsetMask&, const SubsetMask&) = default;

  SubsetMask& operator&=(const SubsetMask& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  SubsetMask& operator|=(const SubsetMask& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  friend SubsetMask operator&(SubsetMask a, const SubsetMask& b) { return a &= b; }
  friend SubsetMask operator|(SubsetMask a, const SubsetMask& b) { return a |= b; }

  /// Copy with one extra element set (the S^1 variants).
  SubsetMask with(Elem i) const {
    SubsetMask m = *this;
    m.set(i);
    return m;
  }

  template <typename F>
  void for_each(F f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi)
      for (std::uint64_t bits = w_[wi]; bits; bits &= bits - 1)
        f(static_cast<Elem>(wi * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
  }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](Elem e) { out.push_back(e); });
    return out;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

enum class Side { kLeft, kRight };
enum class Sandwich { kBSx, kXSc };

/// Per-ring cache of the subset families the solvers and checkers query
/// millions of times. Each family is computed in full on first use under a
/// once-flag, so repeated requests return the identical mask object and
/// concurrent readers are safe.
class SubsetStore {
 public:
  explicit SubsetStore(int n) : n_(n) {}

  const SubsetMask& left_ann(const FiniteRing& r, Elem a);    // °a
  const SubsetMask& right_ann(const FiniteRing& r, Elem a);   // a°
  const SubsetMask& left_mult(const FiniteRing& r, Elem a);   // Ra
  const SubsetMask& right_mult(const FiniteRing& r, Elem a);  // aR
  const SubsetMask& commutant(const FiniteRing& r, Elem a);
  const SubsetMask& bicommutant(const FiniteRing& r, Elem a);
  const SubsetMask& left_kernel(const FiniteRing& r);   // °R
  const SubsetMask& right_kernel(const FiniteRing& r);  // R°

 private:
  struct Family {
    std::once_flag once;
    std::vector<SubsetMask> masks;
  };
  int n_;
  Family left_ann_, right_ann_, left_mult_, right_mult_, comm_, bicomm_;
  std::once_flag kernels_once_;
  SubsetMask lkernel_, rkernel_;
};

/// °a = {x : x·a = 0}
const SubsetMask& left_annihilator(const FiniteRing& r, Elem a);
/// a° = {x : a·x = 0}
const SubsetMask& right_annihilator(const FiniteRing& r, Elem a);
/// Ra (cached; the S form, no unit)
const SubsetMask& left_multiples(const FiniteRing& r, Elem a);
/// aR (cached; the S form, no unit)
const SubsetMask& right_multiples(const FiniteRing& r, Elem a);

/// bR / Rb, optionally as the S^1 variant bR ∪ {b} / Rb ∪ {b}.
SubsetMask multiples(const FiniteRing& r, Elem b, Side side, bool with_unit);

/// bSx = {b·s·x : s ∈ R} (pattern kBSx, pass b) or xSc = {x·s·c : s ∈ R}
/// (pattern kXSc, pass c). with_unit adds b·x resp. x·c.
SubsetMask sandwich_set(const FiniteRing& r, Elem bc, Elem x, Sandwich pattern,
                        bool with_unit = false);

struct RingKernels {
  const SubsetMask& left;   // °R
  const SubsetMask& right;  // R°
  bool left_faithful;       // °R = {0}
  bool right_faithful;      // R° = {0}
};
RingKernels ring_kernels(const FiniteRing& r);

const SubsetMask& commutant(const FiniteRing& r, Elem a);
/// comm²{a} = {x : xh = hx for all h commuting with a}
const SubsetMask& bicommutant(const FiniteRing& r, Elem a);

}  // namespace ringlab
