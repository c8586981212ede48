#include "checker_util.hpp"
#include "ringlab/checkers.hpp"

namespace ringlab {

using namespace detail;

namespace {

Counterexample pair_cx(const FiniteRing& r, std::string clause,
                       const EntryExt& e1, const EntryExt& e2) {
  Counterexample cx;
  cx.failed_clause = std::move(clause);
  cx.vars = {{"a1", r.label(e1.a)}, {"b1", r.label(e1.b)}, {"c1", r.label(e1.c)},
             {"x1", r.label(e1.x)}, {"a2", r.label(e2.a)}, {"b2", r.label(e2.b)},
             {"c2", r.label(e2.c)}, {"x2", r.label(e2.x)}};
  return cx;
}

}  // namespace

TheoremReport check_absorption(const CheckContext& cx) {
  CheckRun run(cx, "absorption");
  const FiniteRing& r = *cx.ring;
  const auto entries = extend_entries(r, cx.inventory->ann());
  const auto A = static_cast<std::int64_t>(entries.size());

  run.scan(A * A, [&](std::int64_t idx, CxSlot& slot) {
    const EntryExt& e1 = entries[static_cast<std::size_t>(idx / A)];
    const EntryExt& e2 = entries[static_cast<std::size_t>(idx % A)];
    if (e1.b == e2.b) {
      if (r.mul(e1.xa, e2.x) != e2.x)
        slot.add(pair_cx(r, "absorb-shared-b:x1a1x2=x2", e1, e2));
      if (r.mul(e2.xa, e1.x) != e1.x)
        slot.add(pair_cx(r, "absorb-shared-b:x2a2x1=x1", e1, e2));
    }
    if (e1.c == e2.c) {
      if (r.mul(e1.x, e2.ax) != e1.x)
        slot.add(pair_cx(r, "absorb-shared-c:x1a2x2=x1", e1, e2));
      if (r.mul(e2.x, e1.ax) != e2.x)
        slot.add(pair_cx(r, "absorb-shared-c:x2a1x1=x2", e1, e2));
    }
    if (e1.b == e2.b && e1.c == e2.c) {
      const Elem sum = r.add(e1.x, e2.x);
      const Elem aa = r.add(e1.a, e2.a);
      if (sum != r.mul3(e1.x, aa, e2.x) || sum != r.mul3(e2.x, aa, e1.x))
        slot.add(pair_cx(r, "absorption-law", e1, e2));
    }
  });

  // Mixed one-sided version: lann of a1 against rann of a2.
  const auto lanns = all_sided_ann_instances(r, AnnSide::kLann);
  const auto ranns = all_sided_ann_instances(r, AnnSide::kRann);
  const auto NL = static_cast<std::int64_t>(lanns.size());
  const auto NR = static_cast<std::int64_t>(ranns.size());
  const RingKernels kernels = ring_kernels(r);

  run.scan(NL * NR, [&](std::int64_t idx, CxSlot& slot) {
    const SidedInst& l = lanns[static_cast<std::size_t>(idx / NR)];
    const SidedInst& rr = ranns[static_cast<std::size_t>(idx % NR)];
    if (l.b == rr.b &&
        !kernels.right.test(r.sub(r.mul3(l.x, l.a, rr.x), rr.x))) {
      Counterexample c;
      c.failed_clause = "absorb-mixed-shared-b-in-right-kernel";
      c.vars = {{"a1", r.label(l.a)},  {"b", r.label(l.b)},
                {"c1", r.label(l.c)},  {"x1", r.label(l.x)},
                {"a2", r.label(rr.a)}, {"c2", r.label(rr.c)},
                {"x2", r.label(rr.x)}};
      slot.add(std::move(c));
    }
    if (l.c == rr.c &&
        !kernels.left.test(r.sub(r.mul3(l.x, rr.a, rr.x), l.x))) {
      Counterexample c;
      c.failed_clause = "absorb-mixed-shared-c-in-left-kernel";
      c.vars = {{"a1", r.label(l.a)},  {"b1", r.label(l.b)},
                {"c", r.label(l.c)},   {"x1", r.label(l.x)},
                {"a2", r.label(rr.a)}, {"b2", r.label(rr.b)},
                {"x2", r.label(rr.x)}};
      slot.add(std::move(c));
    }
  });
  return run.finish();
}

TheoremReport check_reverse_order(const CheckContext& cx, CertFlavor flavor) {
  const bool ann = flavor == CertFlavor::kAnn;
  CheckRun run(cx, ann ? "reverse-order-ann" : "reverse-order-bc");
  const FiniteRing& r = *cx.ring;
  const CertificateInventory& inv = *cx.inventory;
  const auto entries = extend_entries(r, ann ? inv.ann() : inv.bc());
  const auto A = static_cast<std::int64_t>(entries.size());
  const char* tag = ann ? "reverse-ann" : "reverse-bc";

  run.scan(A * A, [&](std::int64_t idx, CxSlot& slot) {
    const EntryExt& e1 = entries[static_cast<std::size_t>(idx / A)];
    const EntryExt& e2 = entries[static_cast<std::size_t>(idx % A)];
    const Elem p = r.mul(e1.a, e2.a);   // a1 a2
    const Elem z = r.mul(e2.x, e1.x);   // x2 x1
    const auto w = ann ? inv.ann_witness(p, e2.b, e1.c) : inv.bc_witness(p, e2.b, e1.c);
    const bool law = w.has_value() && *w == z;
    const bool rhs = r.mul3(z, p, e2.b) == e2.b && r.mul3(e1.c, p, z) == e1.c;
    if (law && !rhs) slot.add(pair_cx(r, std::string(tag) + ":only-if", e1, e2));
    if (rhs && !law) slot.add(pair_cx(r, std::string(tag) + ":if", e1, e2));

    const bool br1 = e1.xa == e1.ax && e1.c == e2.c;
    const bool br2 = e2.xa == e2.ax && e1.b == e2.b;
    const bool br3 = e1.xa == e2.ax;
    if (br1 && !law) slot.add(pair_cx(r, std::string(tag) + "-sufficiency-1", e1, e2));
    if (br2 && !law) slot.add(pair_cx(r, std::string(tag) + "-sufficiency-2", e1, e2));
    if (br3 && !law) slot.add(pair_cx(r, std::string(tag) + "-sufficiency-3", e1, e2));

    if (!ann) {
      // Each sufficiency branch restated through multiple sets.
      const bool m1 = right_multiples(r, e1.ab) == right_multiples(r, e1.b) &&
                      left_multiples(r, e1.ca) == left_multiples(r, e1.c) &&
                      e1.c == e2.c;
      const bool m2 = right_multiples(r, e2.ab) == right_multiples(r, e2.b) &&
                      left_multiples(r, e2.ca) == left_multiples(r, e2.c) &&
                      e1.b == e2.b;
      const bool m3 = right_multiples(r, e2.ab) == right_multiples(r, e1.b) &&
                      left_multiples(r, e1.ca) == left_multiples(r, e2.c);
      if (br1 != m1) slot.add(pair_cx(r, "reverse-bc-restate-1", e1, e2));
      if (br2 != m2) slot.add(pair_cx(r, "reverse-bc-restate-2", e1, e2));
      if (br3 != m3) slot.add(pair_cx(r, "reverse-bc-restate-3", e1, e2));
    }
  });
  return run.finish();
}

TheoremReport check_cline(const CheckContext& cx) {
  CheckRun run(cx, "cline");
  const FiniteRing& r = *cx.ring;
  const CertificateInventory& inv = *cx.inventory;
  const UnitalExtension ext(r);
  const auto n = static_cast<std::int64_t>(r.size());
  const int M = y_range(cx);  // mu, nu range over R^1

  // Group certificate entries by the inverted element (entries are sorted
  // by (a,b,c)), and index factor pairs by their product.
  const auto& annv = inv.ann();
  const auto& bcv = inv.bc();
  std::vector<std::pair<std::int32_t, std::int32_t>> ann_span(
      static_cast<std::size_t>(n), {0, 0}),
      bc_span(static_cast<std::size_t>(n), {0, 0});
  for (std::size_t i = 0; i < annv.size();) {
    std::size_t j = i;
    while (j < annv.size() && annv[j].a == annv[i].a) ++j;
    ann_span[static_cast<std::size_t>(annv[i].a)] = {static_cast<std::int32_t>(i),
                                                     static_cast<std::int32_t>(j)};
    i = j;
  }
  for (std::size_t i = 0; i < bcv.size();) {
    std::size_t j = i;
    while (j < bcv.size() && bcv[j].a == bcv[i].a) ++j;
    bc_span[static_cast<std::size_t>(bcv[i].a)] = {static_cast<std::int32_t>(i),
                                                   static_cast<std::int32_t>(j)};
    i = j;
  }
  std::vector<std::vector<std::pair<Elem, Elem>>> pairs_by_product(
      static_cast<std::size_t>(n));
  for (Elem a1 = 0; a1 < n; ++a1)
    for (Elem a2 = 0; a2 < n; ++a2)
      pairs_by_product[static_cast<std::size_t>(r.mul(a1, a2))].emplace_back(a1, a2);

  auto quad_cx = [&](std::string clause, Elem a1, Elem a2, Elem b, Elem c,
                     Elem x) {
    Counterexample c2;
    c2.failed_clause = std::move(clause);
    c2.vars = {{"a1", r.label(a1)}, {"a2", r.label(a2)}, {"b", r.label(b)},
               {"c", r.label(c)}, {"x", r.label(x)}};
    return c2;
  };

  // Transport of an inverse of (a1 a2)^{k+1} to one of (a2 a1)^k, k <= 3.
  run.scan(n * n * 3, [&](std::int64_t idx, CxSlot& slot) {
    const int k = static_cast<int>(idx % 3) + 1;
    const std::int64_t pairIdx = idx / 3;
    const Elem a1 = static_cast<Elem>(pairIdx / n);
    const Elem a2 = static_cast<Elem>(pairIdx % n);
    const Elem p = r.mul(a1, a2);
    const Elem q = r.pow(p, k + 1);
    const auto [lo, hi] = ann_span[static_cast<std::size_t>(q)];
    if (lo == hi) return;
    const Elem pt = r.mul(a2, a1);
    const Elem tgt = r.pow(pt, k);
    const Elem pk = r.pow(p, k);
    for (std::int32_t i = lo; i < hi; ++i) {
      const CertEntry& e = annv[static_cast<std::size_t>(i)];
      const Elem nb = r.mul(a2, e.b);
      const Elem nc = r.mul(e.c, a1);
      const Elem z = r.mul3(a2, e.x, a1);
      if (!satisfies_ann(r, tgt, nb, nc, z) ||
          inv.ann_witness(tgt, nb, nc) != std::optional<Elem>(z)) {
        slot.add(quad_cx("cline-transport", a1, a2, e.b, e.c, e.x));
        continue;
      }
      if (r.mul(e.x, pk) == r.mul(pk, e.x) && r.mul(z, tgt) != r.mul(tgt, z))
        slot.add(quad_cx("cline-power-commute", a1, a2, e.b, e.c, e.x));
      if (bicommutant(r, p).test(e.x) && !bicommutant(r, pt).test(z))
        slot.add(quad_cx("cline-bicommutant", a1, a2, e.b, e.c, e.x));
    }
  });

  // Square transport for commuting inverses, and its mu/nu widening.
  run.scan(static_cast<std::int64_t>(annv.size()), [&](std::int64_t idx, CxSlot& slot) {
    const CertEntry& e = annv[static_cast<std::size_t>(idx)];
    const Elem P = e.a;
    const Elem xx = r.mul(e.x, e.x);
    const bool commutes = r.mul(e.x, P) == r.mul(P, e.x);
    const Elem Pb = r.mul(P, e.b);
    const Elem cP = r.mul(e.c, P);
    for (const auto& [a1, a2] : pairs_by_product[static_cast<std::size_t>(P)]) {
      const Elem tgt = r.mul(a2, a1);
      const Elem z2 = r.mul3(a2, xx, a1);
      if (commutes) {
        const Elem nb = r.mul(a2, e.b);
        const Elem nc = r.mul(e.c, a1);
        if (!satisfies_ann(r, tgt, nb, nc, z2) ||
            inv.ann_witness(tgt, nb, nc) != std::optional<Elem>(z2))
          slot.add(quad_cx("cline-square-transport", a1, a2, e.b, e.c, e.x));
      }
      for (int mu = 0; mu < M; ++mu) {
        const Elem bmu = ext.act_right(e.b, mu);
        if (!right_multiples(r, bmu).test(Pb)) continue;
        for (int nu = 0; nu < M; ++nu) {
          const Elem nuc = ext.act_left(nu, e.c);
          if (!left_multiples(r, nuc).test(cP)) continue;
          const Elem nb = r.mul(a2, bmu);
          const Elem nc = r.mul(nuc, a1);
          if (!satisfies_ann(r, tgt, nb, nc, z2) ||
              inv.ann_witness(tgt, nb, nc) != std::optional<Elem>(z2))
            slot.add(quad_cx("cline-mu-nu-transport", a1, a2, e.b, e.c, e.x));
        }
      }
    }
  });

  // Same widening for plain (b,c)-inverses, plus the shared-(d,d) case.
  run.scan(static_cast<std::int64_t>(bcv.size()), [&](std::int64_t idx, CxSlot& slot) {
    const CertEntry& e = bcv[static_cast<std::size_t>(idx)];
    const Elem P = e.a;
    const Elem xx = r.mul(e.x, e.x);
    const bool commutes = r.mul(e.x, P) == r.mul(P, e.x);
    const Elem Pb = r.mul(P, e.b);
    const Elem cP = r.mul(e.c, P);
    for (const auto& [a1, a2] : pairs_by_product[static_cast<std::size_t>(P)]) {
      const Elem tgt = r.mul(a2, a1);
      const Elem z2 = r.mul3(a2, xx, a1);
      for (int mu = 0; mu < M; ++mu) {
        const Elem bmu = ext.act_right(e.b, mu);
        if (!right_multiples(r, bmu).test(Pb)) continue;
        for (int nu = 0; nu < M; ++nu) {
          const Elem nuc = ext.act_left(nu, e.c);
          if (!left_multiples(r, nuc).test(cP)) continue;
          const Elem nb = r.mul(a2, bmu);
          const Elem nc = r.mul(nuc, a1);
          if (!satisfies_bc(r, tgt, nb, nc, z2) ||
              inv.bc_witness(tgt, nb, nc) != std::optional<Elem>(z2))
            slot.add(quad_cx("cline-bc-mu-nu-transport", a1, a2, e.b, e.c, e.x));
        }
      }
      if (commutes && e.b == e.c) {
        const Elem nd = r.mul3(a2, e.b, a1);
        if (!satisfies_bc(r, tgt, nd, nd, z2) ||
            inv.bc_witness(tgt, nd, nd) != std::optional<Elem>(z2))
          slot.add(quad_cx("cline-bc-dd-transport", a1, a2, e.b, e.c, e.x));
      }
    }
  });

  // Variant with a1 a2 a1 = a1 a3 a1 replacing the second factor.
  run.scan(static_cast<std::int64_t>(bcv.size()), [&](std::int64_t idx, CxSlot& slot) {
    const CertEntry& e = bcv[static_cast<std::size_t>(idx)];
    if (e.b != e.c) return;
    const Elem P = e.a, d = e.b;
    if (r.mul(e.x, P) != r.mul(P, e.x)) return;
    const Elem xx = r.mul(e.x, e.x);
    for (const auto& [a1, a2] : pairs_by_product[static_cast<std::size_t>(P)]) {
      const Elem Pa1 = r.mul(P, a1);
      for (Elem a3 = 0; a3 < n; ++a3) {
        if (r.mul3(a1, a3, a1) != Pa1) continue;
        const Elem tgt = r.mul(a3, a1);
        const Elem z3 = r.mul3(a3, xx, a1);
        const Elem nd = r.mul3(a3, d, a1);
        if (!satisfies_bc(r, tgt, nd, nd, z3) ||
            inv.bc_witness(tgt, nd, nd) != std::optional<Elem>(z3)) {
          slot.add(quad_cx("cline-remark-transport", a1, a3, d, d, e.x));
        } else if (r.mul(z3, tgt) != r.mul(tgt, z3)) {
          slot.add(quad_cx("cline-remark-commute", a1, a3, d, d, e.x));
        }
      }
    }
  });

  // Drazin transport and the index bound.
  run.scan(n * n, [&](std::int64_t idx, CxSlot& slot) {
    const Elem a1 = static_cast<Elem>(idx / n);
    const Elem a2 = static_cast<Elem>(idx % n);
    const DrazinEntry& dp = inv.drazin_of(r.mul(a1, a2));
    if (!dp.exists) return;
    const DrazinEntry& dq = inv.drazin_of(r.mul(a2, a1));
    if (!dq.exists) {
      slot.add(quad_cx("cline-drazin-transport", a1, a2, r.zero(), r.zero(),
                       dp.witness));
      return;
    }
    if (dq.index - dp.index > 1 || dp.index - dq.index > 1) {
      Counterexample c;
      c.failed_clause = "cline-drazin-index-bound";
      c.vars = {{"a1", r.label(a1)},
                {"a2", r.label(a2)},
                {"ind(a1a2)", std::to_string(dp.index)},
                {"ind(a2a1)", std::to_string(dq.index)}};
      slot.add(std::move(c));
    }
  });
  return run.finish();
}

}  // namespace ringlab
