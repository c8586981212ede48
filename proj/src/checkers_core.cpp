#include "checker_util.hpp"
#include "ringlab/checkers.hpp"

namespace ringlab {

namespace detail {

std::vector<SidedInst> all_sided_ann_instances(const FiniteRing& r, AnnSide side) {
  std::vector<SidedInst> out;
  const int n = r.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (side == AnnSide::kLann) {
          const SubsetMask& rc = right_annihilator(r, c);
          for (Elem x = 0; x < n; ++x)
            if (r.mul3(x, a, b) == b && rc.subset_of(right_annihilator(r, x)))
              out.push_back({a, b, c, x, r.mul3(x, a, x) == x});
        } else {
          const SubsetMask& lb = left_annihilator(r, b);
          for (Elem y = 0; y < n; ++y)
            if (r.mul3(c, a, y) == c && lb.subset_of(left_annihilator(r, y)))
              out.push_back({a, b, c, y, r.mul3(y, a, y) == y});
        }
      }
  return out;
}

std::vector<SidedInst> all_sided_bc_instances(const FiniteRing& r, Side side) {
  std::vector<SidedInst> out;
  const int n = r.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (side == Side::kLeft) {
          const SubsetMask& Sc = left_multiples(r, c);
          for (Elem y = 0; y < n; ++y)
            if (r.mul3(y, a, b) == b && Sc.test(y))
              out.push_back({a, b, c, y, r.mul3(y, a, y) == y});
        } else {
          const SubsetMask& bS = right_multiples(r, b);
          for (Elem y = 0; y < n; ++y)
            if (r.mul3(c, a, y) == c && bS.test(y))
              out.push_back({a, b, c, y, r.mul3(y, a, y) == y});
        }
      }
  return out;
}

}  // namespace detail

using namespace detail;

namespace {

void decode_triple(std::int64_t idx, std::int64_t n, Elem& a, Elem& b, Elem& c) {
  a = static_cast<Elem>(idx / (n * n));
  b = static_cast<Elem>((idx / n) % n);
  c = static_cast<Elem>(idx % n);
}

}  // namespace

TheoremReport check_uniqueness(const CheckContext& cx) {
  CheckRun run(cx, "ann-uniqueness");
  const FiniteRing& r = *cx.ring;
  const auto n = static_cast<std::int64_t>(r.size());

  run.scan(n * n * n, [&](std::int64_t idx, CxSlot& slot) {
    Elem a, b, c;
    decode_triple(idx, n, a, b, c);
    // Re-derive from the defining conditions; do not trust the inventory.
    const SubsetMask& lb = left_annihilator(r, b);
    const SubsetMask& rc = right_annihilator(r, c);
    Elem first = -1;
    for (Elem x = 0; x < r.size(); ++x) {
      if (r.mul3(x, a, b) != b || r.mul3(c, a, x) != c) continue;
      if (r.mul3(x, a, x) != x) continue;
      if (!lb.subset_of(left_annihilator(r, x))) continue;
      if (!rc.subset_of(right_annihilator(r, x))) continue;
      if (first == -1) {
        first = x;
      } else {
        slot.add(cx_of(r, "ann-inverse-multiplicity",
                       {{"a", a}, {"b", b}, {"c", c}, {"x1", first}, {"x2", x}}));
        break;
      }
    }
  });
  return run.finish();
}

TheoremReport check_sided_composition(const CheckContext& cx) {
  CheckRun run(cx, "sided-composition");
  const FiniteRing& r = *cx.ring;
  const auto n = static_cast<std::int64_t>(r.size());
  const CertificateInventory& inv = *cx.inventory;

  run.scan(n * n * n, [&](std::int64_t idx, CxSlot& slot) {
    Elem a, b, c;
    decode_triple(idx, n, a, b, c);
    const SidedSolutionSet L = sided_ann_inverses(r, a, b, c, AnnSide::kLann);
    if (L.solutions.empty()) return;
    const SidedSolutionSet R = sided_ann_inverses(r, a, b, c, AnnSide::kRann);
    if (R.solutions.empty()) return;
    const auto w = inv.ann_witness(a, b, c);
    if (!w.has_value()) {
      slot.add(cx_of(r, "sided-pair-implies-ann-existence", {{"a", a}, {"b", b}, {"c", c}}));
      return;
    }
    for (Elem xl : L.solutions)
      for (Elem xr : R.solutions) {
        const Elem z = r.mul3(xl, a, xr);
        if (z != *w || !satisfies_ann(r, a, b, c, z)) {
          slot.add(cx_of(r, "composition-is-the-ann-inverse",
                         {{"a", a}, {"b", b}, {"c", c}, {"x_l", xl}, {"x_r", xr}, {"z", z}}));
          return;
        }
      }
  });
  return run.finish();
}

TheoremReport check_sided_propositions(const CheckContext& cx) {
  CheckRun run(cx, "sided-propositions");
  const FiniteRing& r = *cx.ring;
  const auto n = static_cast<std::int64_t>(r.size());
  const CertificateInventory& inv = *cx.inventory;

  // Per-triple statements about lann/rann solution sets.
  run.scan(n * n * n, [&](std::int64_t idx, CxSlot& slot) {
    Elem a, b, c;
    decode_triple(idx, n, a, b, c);
    const auto w = inv.ann_witness(a, b, c);
    if (!w.has_value()) return;
    const SidedSolutionSet L = sided_ann_inverses(r, a, b, c, AnnSide::kLann);
    const SidedSolutionSet R = sided_ann_inverses(r, a, b, c, AnnSide::kRann);

    for (std::size_t li = 0; li < L.solutions.size(); ++li) {
      const Elem xl = L.solutions[li];
      // x_l a x_l stabilizes: °b ⊆ °(x_l a x_l) and (x_l a x_l) a x_l = x_l a x_l.
      const Elem q = r.mul3(xl, a, xl);
      if (!left_annihilator(r, b).subset_of(left_annihilator(r, q)))
        slot.add(cx_of(r, "lann-square-kills-lann-b",
                       {{"a", a}, {"b", b}, {"c", c}, {"x_l", xl}}));
      if (r.mul3(q, a, xl) != q)
        slot.add(cx_of(r, "lann-square-stable",
                       {{"a", a}, {"b", b}, {"c", c}, {"x_l", xl}}));
      // x_l a x_l is the ann-inverse iff c a x_l = c.
      if ((q == *w) != (r.mul3(c, a, xl) == c))
        slot.add(cx_of(r, "lann-square-is-ann-iff-caxl",
                       {{"a", a}, {"b", b}, {"c", c}, {"x_l", xl}}));
      // Regular case: x_l is the ann-inverse iff c ∈ R x_l.
      if (L.regular_flags[li] &&
          (xl == *w) != left_multiples(r, xl).test(c))
        slot.add(cx_of(r, "regular-lann-is-ann-iff-c-in-Rxl",
                       {{"a", a}, {"b", b}, {"c", c}, {"x_l", xl}}));
    }
    for (std::size_t ri = 0; ri < R.solutions.size(); ++ri) {
      const Elem xr = R.solutions[ri];
      const Elem q = r.mul3(xr, a, xr);
      if (!right_annihilator(r, c).subset_of(right_annihilator(r, q)))
        slot.add(cx_of(r, "rann-square-kills-rann-c",
                       {{"a", a}, {"b", b}, {"c", c}, {"x_r", xr}}));
      if (r.mul3(xr, a, q) != q)
        slot.add(cx_of(r, "rann-square-stable",
                       {{"a", a}, {"b", b}, {"c", c}, {"x_r", xr}}));
      if ((q == *w) != (r.mul3(xr, a, b) == b))
        slot.add(cx_of(r, "rann-square-is-ann-iff-xrab",
                       {{"a", a}, {"b", b}, {"c", c}, {"x_r", xr}}));
      if (R.regular_flags[ri] &&
          (xr == *w) != right_multiples(r, xr).test(b))
        slot.add(cx_of(r, "regular-rann-is-ann-iff-b-in-xrR",
                       {{"a", a}, {"b", b}, {"c", c}, {"x_r", xr}}));
    }
    // The ann-inverse equals x_l iff x_l ∈ R x_r (and dually).
    for (Elem xl : L.solutions)
      for (Elem xr : R.solutions) {
        if ((xl == *w) != left_multiples(r, xr).test(xl))
          slot.add(cx_of(r, "lann-is-ann-iff-in-R-xr",
                         {{"a", a}, {"b", b}, {"c", c}, {"x_l", xl}, {"x_r", xr}}));
        if ((xr == *w) != right_multiples(r, xl).test(xr))
          slot.add(cx_of(r, "rann-is-ann-iff-in-xl-R",
                         {{"a", a}, {"b", b}, {"c", c}, {"x_l", xl}, {"x_r", xr}}));
      }
  });

  // Four-condition solutions x: x a x is the ann-inverse; x a x = x iff
  // x ∈ Rx iff x ∈ xR.
  run.scan(n * n * n * n, [&](std::int64_t idx, CxSlot& slot) {
    const Elem x = static_cast<Elem>(idx % n);
    Elem a, b, c;
    decode_triple(idx / n, n, a, b, c);
    if (r.mul3(x, a, b) != b || r.mul3(c, a, x) != c) return;
    if (!left_annihilator(r, b).subset_of(left_annihilator(r, x))) return;
    if (!right_annihilator(r, c).subset_of(right_annihilator(r, x))) return;
    const Elem z = r.mul3(x, a, x);
    const auto w = inv.ann_witness(a, b, c);
    if (!satisfies_ann(r, a, b, c, z) || !w.has_value() || z != *w) {
      slot.add(cx_of(r, "four-condition-xax-is-ann-inverse",
                     {{"a", a}, {"b", b}, {"c", c}, {"x", x}}));
      return;
    }
    const bool fix = z == x;
    if (fix != left_multiples(r, x).test(x))
      slot.add(cx_of(r, "xax-fixpoint-iff-x-in-Rx",
                     {{"a", a}, {"b", b}, {"c", c}, {"x", x}}));
    if (fix != right_multiples(r, x).test(x))
      slot.add(cx_of(r, "xax-fixpoint-iff-x-in-xR",
                     {{"a", a}, {"b", b}, {"c", c}, {"x", x}}));
  });
  return run.finish();
}

TheoremReport check_faithful_uniqueness(const CheckContext& cx) {
  CheckRun run(cx, "faithful-uniqueness");
  const FiniteRing& r = *cx.ring;
  const auto n = static_cast<std::int64_t>(r.size());
  const CertificateInventory& inv = *cx.inventory;
  const RingKernels kernels = ring_kernels(r);

  run.scan(n * n * n, [&](std::int64_t idx, CxSlot& slot) {
    Elem a, b, c;
    decode_triple(idx, n, a, b, c);
    const auto w = inv.ann_witness(a, b, c);
    if (!w.has_value()) return;
    const SidedSolutionSet L = sided_ann_inverses(r, a, b, c, AnnSide::kLann);
    const SidedSolutionSet R = sided_ann_inverses(r, a, b, c, AnnSide::kRann);
    if (!L.contains(*w) || !R.contains(*w)) {
      slot.add(cx_of(r, "ann-inverse-is-one-sided-solution",
                     {{"a", a}, {"b", b}, {"c", c}, {"x", *w}}));
      return;
    }
    if (kernels.left_faithful) {
      if (L.solutions.size() != 1)
        slot.add(cx_of(r, "left-faithful-lann-unique",
                       {{"a", a}, {"b", b}, {"c", c},
                        {"x1", L.solutions[0]}, {"x2", L.solutions[1]}}));
    } else {
      for (Elem xl : L.solutions)
        if (!kernels.left.test(r.sub(xl, *w))) {
          slot.add(cx_of(r, "lann-differs-from-ann-by-left-kernel",
                         {{"a", a}, {"b", b}, {"c", c}, {"x_l", xl}, {"x", *w}}));
          break;
        }
    }
    if (kernels.right_faithful) {
      if (R.solutions.size() != 1)
        slot.add(cx_of(r, "right-faithful-rann-unique",
                       {{"a", a}, {"b", b}, {"c", c},
                        {"x1", R.solutions[0]}, {"x2", R.solutions[1]}}));
    } else {
      for (Elem xr : R.solutions)
        if (!kernels.right.test(r.sub(xr, *w))) {
          slot.add(cx_of(r, "rann-differs-from-ann-by-right-kernel",
                         {{"a", a}, {"b", b}, {"c", c}, {"x_r", xr}, {"x", *w}}));
          break;
        }
    }
  });
  return run.finish();
}

TheoremReport check_drazin_regularization(const CheckContext& cx) {
  CheckRun run(cx, "drazin-regularization");
  const FiniteRing& r = *cx.ring;
  const auto n = static_cast<std::int64_t>(r.size());
  const CertificateInventory& inv = *cx.inventory;

  run.scan(n * n * n, [&](std::int64_t idx, CxSlot& slot) {
    Elem a, b, c;
    decode_triple(idx, n, a, b, c);
    const SidedSolutionSet L = sided_ann_inverses(r, a, b, c, AnnSide::kLann);
    for (Elem xl : L.solutions) {
      const DrazinEntry& dz = inv.drazin_of(r.mul(xl, a));
      if (!dz.exists) continue;
      const Elem reg = r.mul(dz.witness, xl);
      if (!is_lann_solution(r, a, b, c, reg) || r.mul3(reg, a, reg) != reg) {
        slot.add(cx_of(r, "lann-regularization",
                       {{"a", a}, {"b", b}, {"c", c}, {"x_l", xl}, {"t", dz.witness}}));
        return;
      }
    }
    const SidedSolutionSet R = sided_ann_inverses(r, a, b, c, AnnSide::kRann);
    for (Elem xr : R.solutions) {
      const DrazinEntry& dz = inv.drazin_of(r.mul(a, xr));
      if (!dz.exists) continue;
      const Elem reg = r.mul(xr, dz.witness);
      if (!is_rann_solution(r, a, b, c, reg) || r.mul3(reg, a, reg) != reg) {
        slot.add(cx_of(r, "rann-regularization",
                       {{"a", a}, {"b", b}, {"c", c}, {"x_r", xr}, {"t", dz.witness}}));
        return;
      }
    }
  });
  return run.finish();
}

TheoremReport check_drazin_ann_equivalence(const CheckContext& cx) {
  CheckRun run(cx, "drazin-ann-equivalence");
  const FiniteRing& r = *cx.ring;

  run.scan(r.size(), [&](std::int64_t idx, CxSlot& slot) {
    const Elem a = static_cast<Elem>(idx);
    SolveResult dz = drazin(r, a);
    for (const auto& v : dz.violations) slot.add(violation_to_counterexample(v));

    // Independent sweeps: least m with an ann-(a^m, a^m) inverse, and with a
    // (a^m, a^m)-inverse.
    std::optional<Elem> ann_w, bc_w;
    int ann_m = 0, bc_m = 0;
    for (int m = 1; m <= r.size() && (!ann_w || !bc_w); ++m) {
      const Elem am = r.pow(a, m);
      if (!ann_w) {
        SolveResult s = ann_bc_inverse(r, a, am, am);
        if (s.found()) {
          ann_w = s.cert->witness;
          ann_m = m;
        }
      }
      if (!bc_w) {
        SolveResult s = bc_inverse(r, a, am, am);
        if (s.found()) {
          bc_w = s.cert->witness;
          bc_m = m;
        }
      }
    }

    const bool dz_found = dz.found();
    if (dz_found != ann_w.has_value() ||
        (dz_found && (dz.cert->witness != *ann_w || *dz.cert->drazin_index != ann_m))) {
      slot.add(cx_of(r, "drazin-iff-ann-power", {{"a", a}}));
      return;
    }
    if (dz_found != bc_w.has_value() ||
        (dz_found && (dz.cert->witness != *bc_w || *dz.cert->drazin_index != bc_m))) {
      slot.add(cx_of(r, "drazin-iff-bc-power", {{"a", a}}));
      return;
    }
    if (dz_found) {
      const Elem an = r.pow(a, *dz.cert->drazin_index);
      const Elem x = dz.cert->witness;
      if (!left_annihilator(r, an).subset_of(left_annihilator(r, x)) ||
          !right_annihilator(r, an).subset_of(right_annihilator(r, x)))
        slot.add(cx_of(r, "drazin-power-annihilators", {{"a", a}, {"x", x}}));
    }
  });
  return run.finish();
}

}  // namespace ringlab
