#include "checker_util.hpp"
#include "ringlab/checkers.hpp"

namespace ringlab {

using namespace detail;

namespace {

Counterexample pair_only_cx(const FiniteRing& r, std::string clause,
                            const EntryExt& e1, const EntryExt& e2) {
  Counterexample cx;
  cx.failed_clause = std::move(clause);
  cx.vars = {{"a1", r.label(e1.a)}, {"b1", r.label(e1.b)}, {"c1", r.label(e1.c)},
             {"x1", r.label(e1.x)}, {"a2", r.label(e2.a)}, {"b2", r.label(e2.b)},
             {"c2", r.label(e2.c)}, {"x2", r.label(e2.x)}};
  return cx;
}

Counterexample pair_cx(const FiniteRing& r, const UnitalExtension& ext,
                       std::string clause, const EntryExt& e1, const EntryExt& e2,
                       int yi) {
  Counterexample cx = pair_only_cx(r, std::move(clause), e1, e2);
  cx.vars.emplace_back("y", ext.label(yi));
  return cx;
}

Counterexample sided_pair_cx(const FiniteRing& r, const UnitalExtension& ext,
                             std::string clause, const SidedInst& i1,
                             const SidedInst& i2, int yi) {
  Counterexample cx;
  cx.failed_clause = std::move(clause);
  cx.vars = {{"a1", r.label(i1.a)}, {"b1", r.label(i1.b)}, {"c1", r.label(i1.c)},
             {"x1", r.label(i1.x)}, {"a2", r.label(i2.a)}, {"b2", r.label(i2.b)},
             {"c2", r.label(i2.c)}, {"x2", r.label(i2.x)}, {"y", ext.label(yi)}};
  return cx;
}

}  // namespace

TheoremReport check_intertwining_ann(const CheckContext& cx) {
  CheckRun run(cx, "intertwine-ann");
  const FiniteRing& r = *cx.ring;
  const UnitalExtension ext(r);
  const auto entries = extend_entries(r, cx.inventory->ann());
  const auto A = static_cast<std::int64_t>(entries.size());
  const auto M = static_cast<std::int64_t>(y_range(cx));
  const Elem zero = r.zero();

  run.scan(A * A * M, [&](std::int64_t idx, CxSlot& slot) {
    const int yi = static_cast<int>(idx % M);
    const std::int64_t pair = idx / M;
    const EntryExt& e1 = entries[static_cast<std::size_t>(pair / A)];
    const EntryExt& e2 = entries[static_cast<std::size_t>(pair % A)];

    const Elem ya1 = ext.act_left(yi, e1.a), a2y = ext.act_right(e2.a, yi);
    const Elem yb1 = ext.act_left(yi, e1.b), b2y = ext.act_right(e2.b, yi);
    const Elem yc1 = ext.act_left(yi, e1.c), c2y = ext.act_right(e2.c, yi);
    const Elem yx1 = ext.act_left(yi, e1.x), x2y = ext.act_right(e2.x, yi);
    const Elem eps1 = r.sub(ya1, a2y);
    const Elem eps2 = r.sub(yb1, b2y);
    const Elem eps3 = r.sub(yc1, c2y);
    const Elem tau = r.sub(yx1, x2y);
    const Elem xe1 = r.mul(e2.x, eps1);
    const Elem ce1 = r.mul(e2.c, eps1);

    // The three displayed residual identities hold for every tuple, with no
    // intertwining hypothesis at all.
    if (tau != r.add(r.add(r.mul(tau, e1.ax), r.mul(e2.xa, tau)),
                     r.mul(xe1, e1.x)))
      slot.add(pair_cx(r, ext, "residual-tau", e1, e2, yi));
    if (r.mul(tau, e1.ab) !=
        r.sub(r.sub(eps2, r.mul(e2.xa, eps2)), r.mul(xe1, e1.b)))
      slot.add(pair_cx(r, ext, "residual-b-side", e1, e2, yi));
    if (r.mul(e2.ca, tau) !=
        r.sub(r.sub(eps3, r.mul(eps3, e1.ax)), r.mul(ce1, e1.x)))
      slot.add(pair_cx(r, ext, "residual-c-side", e1, e2, yi));

    const bool lhs = tau == zero;
    const bool cond_eq = r.mul(c2y, e1.ab) == r.mul(e2.ca, yb1);
    const bool rhs = cond_eq && right_multiples(r, e2.x).test(yb1) &&
                     left_multiples(r, e1.x).test(c2y);
    const bool phr = cond_eq && yb1 == r.mul(e2.xa, yb1) &&
                     c2y == r.mul(c2y, e1.ax);
    if (lhs && !rhs) slot.add(pair_cx(r, ext, "intertwine-ann:only-if", e1, e2, yi));
    if (rhs && !lhs) slot.add(pair_cx(r, ext, "intertwine-ann:if", e1, e2, yi));
    if (rhs != phr) slot.add(pair_cx(r, ext, "intertwine-ann:phrasings-agree", e1, e2, yi));

    // Sufficiency with the stronger memberships yb1 ∈ b2R, c2y ∈ Rc1.
    if (cond_eq && right_multiples(r, e2.b).test(yb1) &&
        left_multiples(r, e1.c).test(c2y) && !lhs)
      slot.add(pair_cx(r, ext, "intertwine-ann:corollary-sufficiency", e1, e2, yi));
  });
  return run.finish();
}

TheoremReport check_intertwining_bc(const CheckContext& cx) {
  CheckRun run(cx, "intertwine-bc");
  const FiniteRing& r = *cx.ring;
  const UnitalExtension ext(r);
  const auto entries = extend_entries(r, cx.inventory->bc());
  const auto A = static_cast<std::int64_t>(entries.size());
  const auto M = static_cast<std::int64_t>(y_range(cx));
  const Elem zero = r.zero();

  run.scan(A * A * M, [&](std::int64_t idx, CxSlot& slot) {
    const int yi = static_cast<int>(idx % M);
    const std::int64_t pair = idx / M;
    const EntryExt& e1 = entries[static_cast<std::size_t>(pair / A)];
    const EntryExt& e2 = entries[static_cast<std::size_t>(pair % A)];

    const Elem yb1 = ext.act_left(yi, e1.b);
    const Elem c2y = ext.act_right(e2.c, yi);
    const Elem yx1 = ext.act_left(yi, e1.x), x2y = ext.act_right(e2.x, yi);
    const bool lhs = r.sub(yx1, x2y) == zero;
    const bool cond_eq = r.mul(c2y, e1.ab) == r.mul(e2.ca, yb1);
    const bool rhs = cond_eq && right_multiples(r, e2.b).test(yb1) &&
                     left_multiples(r, e1.c).test(c2y);
    const bool phr = cond_eq && yb1 == r.mul(e2.xa, yb1) &&
                     c2y == r.mul(c2y, e1.ax);
    if (lhs && !rhs) slot.add(pair_cx(r, ext, "intertwine-bc:only-if", e1, e2, yi));
    if (rhs && !lhs) slot.add(pair_cx(r, ext, "intertwine-bc:if", e1, e2, yi));
    if (rhs != phr) slot.add(pair_cx(r, ext, "intertwine-bc:phrasings-agree", e1, e2, yi));
  });

  // Two inverses of the same element coincide exactly when the multiple
  // sets match.
  run.scan(A * A, [&](std::int64_t idx, CxSlot& slot) {
    const EntryExt& e1 = entries[static_cast<std::size_t>(idx / A)];
    const EntryExt& e2 = entries[static_cast<std::size_t>(idx % A)];
    if (e1.a != e2.a) return;
    const bool same = e1.x == e2.x;
    const bool masks = right_multiples(r, e1.b) == right_multiples(r, e2.b) &&
                       left_multiples(r, e1.c) == left_multiples(r, e2.c);
    if (same != masks)
      slot.add(pair_only_cx(r, "bc-same-element-iff-same-multiple-sets", e1, e2));
  });

  // One-sided versions: sufficiency for right x1 / left x2, necessity for
  // regular left x1 / regular right x2.
  const auto rights = all_sided_bc_instances(r, Side::kRight);
  const auto lefts = all_sided_bc_instances(r, Side::kLeft);
  const auto NR = static_cast<std::int64_t>(rights.size());
  const auto NL = static_cast<std::int64_t>(lefts.size());

  run.scan(NR * NL * M, [&](std::int64_t idx, CxSlot& slot) {
    const int yi = static_cast<int>(idx % M);
    const std::int64_t pair = idx / M;
    const SidedInst& i1 = rights[static_cast<std::size_t>(pair / NL)];
    const SidedInst& i2 = lefts[static_cast<std::size_t>(pair % NL)];
    const Elem yb1 = ext.act_left(yi, i1.b);
    const Elem c2y = ext.act_right(i2.c, yi);
    const Elem a1b1 = r.mul(i1.a, i1.b);
    const Elem c2a2 = r.mul(i2.c, i2.a);
    const bool conds = r.mul(c2y, a1b1) == r.mul(c2a2, yb1) &&
                       yb1 == r.mul(r.mul(i2.x, i2.a), yb1) &&
                       c2y == r.mul(r.mul(c2y, i1.a), i1.x);
    if (conds && ext.act_left(yi, i1.x) != ext.act_right(i2.x, yi))
      slot.add(sided_pair_cx(r, ext, "bc-sided-sufficiency", i1, i2, yi));
  });

  run.scan(NL * NR * M, [&](std::int64_t idx, CxSlot& slot) {
    const int yi = static_cast<int>(idx % M);
    const std::int64_t pair = idx / M;
    const SidedInst& i1 = lefts[static_cast<std::size_t>(pair / NR)];
    const SidedInst& i2 = rights[static_cast<std::size_t>(pair % NR)];
    if (!i1.regular || !i2.regular) return;
    if (ext.act_left(yi, i1.x) != ext.act_right(i2.x, yi)) return;
    const Elem yb1 = ext.act_left(yi, i1.b);
    const Elem c2y = ext.act_right(i2.c, yi);
    const bool conds = r.mul(c2y, r.mul(i1.a, i1.b)) ==
                           r.mul(r.mul(i2.c, i2.a), yb1) &&
                       yb1 == r.mul(r.mul(i2.x, i2.a), yb1) &&
                       c2y == r.mul(r.mul(c2y, i1.a), i1.x);
    if (!conds)
      slot.add(sided_pair_cx(r, ext, "bc-sided-necessity", i1, i2, yi));
  });
  return run.finish();
}

TheoremReport check_centralizer_sufficiency(const CheckContext& cx) {
  CheckRun run(cx, "centralizer-sufficiency");
  const FiniteRing& r = *cx.ring;
  const UnitalExtension ext(r);
  const auto entries = extend_entries(r, cx.inventory->bc());
  const auto A = static_cast<std::int64_t>(entries.size());
  const auto n = static_cast<std::int64_t>(r.size());

  // Centralizers restricted to translations F: v -> v*t, G: v -> t*v with
  // t in R^1 (the identity map is the t = 1 translation).
  run.scan(A * A * n, [&](std::int64_t idx, CxSlot& slot) {
    const Elem y = static_cast<Elem>(idx % n);
    const std::int64_t pair = idx / n;
    const EntryExt& e1 = entries[static_cast<std::size_t>(pair / A)];
    const EntryExt& e2 = entries[static_cast<std::size_t>(pair % A)];
    if (r.mul(y, e1.a) != r.mul(e2.a, y)) return;
    const Elem yb1 = r.mul(y, e1.b);
    const Elem b2y = r.mul(e2.b, y);
    const Elem yc1 = r.mul(y, e1.c);
    const Elem c2y = r.mul(e2.c, y);
    const bool has_f = yb1 == b2y || right_multiples(r, b2y).test(yb1);
    if (!has_f) return;
    const bool has_g = c2y == yc1 || left_multiples(r, yc1).test(c2y);
    if (!has_g) return;
    if (r.mul(y, e1.x) != r.mul(e2.x, y))
      slot.add(pair_cx(r, ext, "centralizer-translation-sufficiency", e1, e2,
                       static_cast<int>(y)));
  });
  return run.finish();
}

TheoremReport check_intertwine_variants(const CheckContext& cx, CertFlavor flavor) {
  const bool ann = flavor == CertFlavor::kAnn;
  CheckRun run(cx, ann ? "intertwine-variants-ann" : "intertwine-variants-bc");
  const FiniteRing& r = *cx.ring;
  const UnitalExtension ext(r);
  const auto entries =
      extend_entries(r, ann ? cx.inventory->ann() : cx.inventory->bc());
  const auto A = static_cast<std::int64_t>(entries.size());
  const auto M = static_cast<std::int64_t>(y_range(cx));
  const char* tag = ann ? "variants-ann" : "variants-bc";

  run.scan(A * A * M, [&](std::int64_t idx, CxSlot& slot) {
    const int yi = static_cast<int>(idx % M);
    const std::int64_t pair = idx / M;
    const EntryExt& e1 = entries[static_cast<std::size_t>(pair / A)];
    const EntryExt& e2 = entries[static_cast<std::size_t>(pair % A)];

    const Elem ya1x1 = ext.act_left(yi, e1.ax);
    const Elem yx1a1 = ext.act_left(yi, e1.xa);
    const Elem a2x2y = ext.act_right(e2.ax, yi);
    const Elem x2a2y = ext.act_right(e2.xa, yi);
    const Elem ya1b1 = ext.act_left(yi, e1.ab);
    const Elem yb1 = ext.act_left(yi, e1.b);
    const Elem c2y = ext.act_right(e2.c, yi);
    const Elem c2a2y = ext.act_right(e2.ca, yi);

    const bool lhs[4] = {ya1x1 == a2x2y, yx1a1 == x2a2y, ya1x1 == x2a2y,
                         yx1a1 == a2x2y};
    bool rhs[4];
    if (ann) {
      rhs[0] = right_multiples(r, e2.ax).test(ya1b1) &&
               left_multiples(r, e1.x).test(c2y);
      rhs[1] = right_multiples(r, e2.x).test(yb1) &&
               left_multiples(r, e1.xa).test(c2a2y);
      rhs[2] = right_multiples(r, e2.x).test(ya1b1) &&
               left_multiples(r, e1.x).test(c2a2y);
      rhs[3] = right_multiples(r, e2.ax).test(yb1) &&
               left_multiples(r, e1.xa).test(c2y);
    } else {
      rhs[0] = right_multiples(r, e2.ab).test(ya1b1) &&
               left_multiples(r, e1.c).test(c2y);
      rhs[1] = right_multiples(r, e2.b).test(yb1) &&
               left_multiples(r, e1.ca).test(c2a2y);
      rhs[2] = right_multiples(r, e2.b).test(ya1b1) &&
               left_multiples(r, e1.ca).test(c2a2y);
      rhs[3] = right_multiples(r, e2.ab).test(yb1) &&
               left_multiples(r, e1.ca).test(c2y);
    }
    static const char* kOnlyIf[4] = {":1-only-if", ":2-only-if", ":3-only-if",
                                     ":4-only-if"};
    static const char* kIf[4] = {":1-if", ":2-if", ":3-if", ":4-if"};
    for (int k = 0; k < 4; ++k) {
      if (lhs[k] && !rhs[k])
        slot.add(pair_cx(r, ext, std::string(tag) + kOnlyIf[k], e1, e2, yi));
      if (rhs[k] && !lhs[k])
        slot.add(pair_cx(r, ext, std::string(tag) + kIf[k], e1, e2, yi));
    }

    if (ann) {
      // tau_k = tau_k * (a1x1 | x1a1) + (a2x2 | x2a2) * tau_k identically.
      const Elem t1 = r.sub(ya1x1, a2x2y);
      const Elem t2 = r.sub(yx1a1, x2a2y);
      const Elem t3 = r.sub(ya1x1, x2a2y);
      const Elem t4 = r.sub(yx1a1, a2x2y);
      if (t1 != r.add(r.mul(t1, e1.ax), r.mul(e2.ax, t1)))
        slot.add(pair_cx(r, ext, "variants-ann-residual-1", e1, e2, yi));
      if (t2 != r.add(r.mul(t2, e1.xa), r.mul(e2.xa, t2)))
        slot.add(pair_cx(r, ext, "variants-ann-residual-2", e1, e2, yi));
      if (t3 != r.add(r.mul(t3, e1.ax), r.mul(e2.xa, t3)))
        slot.add(pair_cx(r, ext, "variants-ann-residual-3", e1, e2, yi));
      if (t4 != r.add(r.mul(t4, e1.xa), r.mul(e2.ax, t4)))
        slot.add(pair_cx(r, ext, "variants-ann-residual-4", e1, e2, yi));

      // Sufficiency corollary: the coarser memberships force each equality.
      const bool s[4] = {
          right_multiples(r, e2.ab).test(ya1b1) && left_multiples(r, e1.c).test(c2y),
          right_multiples(r, e2.b).test(yb1) && left_multiples(r, e1.ca).test(c2a2y),
          right_multiples(r, e2.b).test(ya1b1) && left_multiples(r, e1.ca).test(c2a2y),
          right_multiples(r, e2.ab).test(yb1) && left_multiples(r, e1.ca).test(c2y)};
      static const char* kSuff[4] = {"variants-ann-sufficiency-1",
                                     "variants-ann-sufficiency-2",
                                     "variants-ann-sufficiency-3",
                                     "variants-ann-sufficiency-4"};
      for (int k = 0; k < 4; ++k)
        if (s[k] && !lhs[k]) slot.add(pair_cx(r, ext, kSuff[k], e1, e2, yi));
    }
  });

  if (ann) {
    // Mask identities the proofs lean on: (a2x2)° = c2°, °(x1a1) = °b1.
    run.scan(A, [&](std::int64_t idx, CxSlot& slot) {
      const EntryExt& e = entries[static_cast<std::size_t>(idx)];
      if (right_annihilator(r, e.ax) != right_annihilator(r, e.c))
        slot.add(cx_of(r, "variants-ann-ax-annihilator",
                       {{"a", e.a}, {"b", e.b}, {"c", e.c}, {"x", e.x}}));
      if (left_annihilator(r, e.xa) != left_annihilator(r, e.b))
        slot.add(cx_of(r, "variants-ann-xa-annihilator",
                       {{"a", e.a}, {"b", e.b}, {"c", e.c}, {"x", e.x}}));
    });
  } else {
    // Four-way equivalence characterizing x1a1 = a2x2.
    run.scan(A * A, [&](std::int64_t idx, CxSlot& slot) {
      const EntryExt& e1 = entries[static_cast<std::size_t>(idx / A)];
      const EntryExt& e2 = entries[static_cast<std::size_t>(idx % A)];
      const bool st1 = e1.xa == e2.ax;
      const bool st2 = right_multiples(r, e2.ab) == right_multiples(r, e1.b) &&
                       left_multiples(r, e1.ca) == left_multiples(r, e2.c);
      const bool st3 = right_multiples(r, e1.b).test(e2.ab) &&
                       left_multiples(r, e2.c).test(e1.ca);
      const bool st4 = right_multiples(r, e2.ab).test(e1.b) &&
                       left_multiples(r, e1.ca).test(e2.c);
      if (st1 != st2 || st1 != st3 || st1 != st4)
        slot.add(pair_only_cx(r, "variants-bc-corollary-4way", e1, e2));
    });
  }
  return run.finish();
}

}  // namespace ringlab
