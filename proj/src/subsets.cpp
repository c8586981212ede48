#include "ringlab/subsets.hpp"

namespace ringlab {

const SubsetMask& SubsetStore::left_ann(const FiniteRing& r, Elem a) {
  std::call_once(left_ann_.once, [&] {
    auto& m = left_ann_.masks;
    m.assign(static_cast<std::size_t>(n_), SubsetMask(n_));
    for (Elem aa = 0; aa < n_; ++aa)
      for (Elem x = 0; x < n_; ++x)
        if (r.mul(x, aa) == r.zero()) m[static_cast<std::size_t>(aa)].set(x);
  });
  return left_ann_.masks[static_cast<std::size_t>(a)];
}

const SubsetMask& SubsetStore::right_ann(const FiniteRing& r, Elem a) {
  std::call_once(right_ann_.once, [&] {
    auto& m = right_ann_.masks;
    m.assign(static_cast<std::size_t>(n_), SubsetMask(n_));
    for (Elem aa = 0; aa < n_; ++aa)
      for (Elem x = 0; x < n_; ++x)
        if (r.mul(aa, x) == r.zero()) m[static_cast<std::size_t>(aa)].set(x);
  });
  return right_ann_.masks[static_cast<std::size_t>(a)];
}

const SubsetMask& SubsetStore::left_mult(const FiniteRing& r, Elem a) {
  std::call_once(left_mult_.once, [&] {
    auto& m = left_mult_.masks;
    m.assign(static_cast<std::size_t>(n_), SubsetMask(n_));
    for (Elem aa = 0; aa < n_; ++aa)
      for (Elem s = 0; s < n_; ++s)
        m[static_cast<std::size_t>(aa)].set(r.mul(s, aa));
  });
  return left_mult_.masks[static_cast<std::size_t>(a)];
}

const SubsetMask& SubsetStore::right_mult(const FiniteRing& r, Elem a) {
  std::call_once(right_mult_.once, [&] {
    auto& m = right_mult_.masks;
    m.assign(static_cast<std::size_t>(n_), SubsetMask(n_));
    for (Elem aa = 0; aa < n_; ++aa)
      for (Elem s = 0; s < n_; ++s)
        m[static_cast<std::size_t>(aa)].set(r.mul(aa, s));
  });
  return right_mult_.masks[static_cast<std::size_t>(a)];
}

const SubsetMask& SubsetStore::commutant(const FiniteRing& r, Elem a) {
  std::call_once(comm_.once, [&] {
    auto& m = comm_.masks;
    m.assign(static_cast<std::size_t>(n_), SubsetMask(n_));
    for (Elem aa = 0; aa < n_; ++aa)
      for (Elem h = 0; h < n_; ++h)
        if (r.mul(h, aa) == r.mul(aa, h)) m[static_cast<std::size_t>(aa)].set(h);
  });
  return comm_.masks[static_cast<std::size_t>(a)];
}

const SubsetMask& SubsetStore::bicommutant(const FiniteRing& r, Elem a) {
  std::call_once(bicomm_.once, [&] {
    auto& m = bicomm_.masks;
    m.assign(static_cast<std::size_t>(n_), SubsetMask(n_));
    for (Elem aa = 0; aa < n_; ++aa) {
      const SubsetMask& comm = commutant(r, aa);
      for (Elem x = 0; x < n_; ++x) {
        bool in = true;
        comm.for_each([&](Elem h) {
          if (in && r.mul(x, h) != r.mul(h, x)) in = false;
        });
        if (in) m[static_cast<std::size_t>(aa)].set(x);
      }
    }
  });
  return bicomm_.masks[static_cast<std::size_t>(a)];
}

const SubsetMask& SubsetStore::left_kernel(const FiniteRing& r) {
  std::call_once(kernels_once_, [&] {
    lkernel_ = SubsetMask(n_);
    rkernel_ = SubsetMask(n_);
    for (Elem x = 0; x < n_; ++x) {
      bool kills_right = true, killed_left = true;
      for (Elem s = 0; s < n_; ++s) {
        if (r.mul(x, s) != r.zero()) kills_right = false;
        if (r.mul(s, x) != r.zero()) killed_left = false;
        if (!kills_right && !killed_left) break;
      }
      if (kills_right) lkernel_.set(x);   // x ∈ °R
      if (killed_left) rkernel_.set(x);   // x ∈ R°
    }
  });
  return lkernel_;
}

const SubsetMask& SubsetStore::right_kernel(const FiniteRing& r) {
  left_kernel(r);
  return rkernel_;
}

const SubsetMask& left_annihilator(const FiniteRing& r, Elem a) {
  return r.subset_store().left_ann(r, a);
}

const SubsetMask& right_annihilator(const FiniteRing& r, Elem a) {
  return r.subset_store().right_ann(r, a);
}

const SubsetMask& left_multiples(const FiniteRing& r, Elem a) {
  return r.subset_store().left_mult(r, a);
}

const SubsetMask& right_multiples(const FiniteRing& r, Elem a) {
  return r.subset_store().right_mult(r, a);
}

SubsetMask multiples(const FiniteRing& r, Elem b, Side side, bool with_unit) {
  const SubsetMask& base =
      side == Side::kRight ? right_multiples(r, b) : left_multiples(r, b);
  return with_unit ? base.with(b) : base;
}

SubsetMask sandwich_set(const FiniteRing& r, Elem bc, Elem x, Sandwich pattern,
                        bool with_unit) {
  SubsetMask m(r.size());
  if (pattern == Sandwich::kBSx) {
    for (Elem s = 0; s < r.size(); ++s) m.set(r.mul3(bc, s, x));
    if (with_unit) m.set(r.mul(bc, x));
  } else {
    for (Elem s = 0; s < r.size(); ++s) m.set(r.mul3(x, s, bc));
    if (with_unit) m.set(r.mul(x, bc));
  }
  return m;
}

RingKernels ring_kernels(const FiniteRing& r) {
  auto& store = r.subset_store();
  const SubsetMask& l = store.left_kernel(r);
  const SubsetMask& rr = store.right_kernel(r);
  const bool lf = l.count() == 1 && l.test(r.zero());
  const bool rf = rr.count() == 1 && rr.test(r.zero());
  return RingKernels{l, rr, lf, rf};
}

const SubsetMask& commutant(const FiniteRing& r, Elem a) {
  return r.subset_store().commutant(r, a);
}

const SubsetMask& bicommutant(const FiniteRing& r, Elem a) {
  return r.subset_store().bicommutant(r, a);
}

}  // namespace ringlab
