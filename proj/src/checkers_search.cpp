#include "checker_util.hpp"
#include "ringlab/checkers.hpp"

namespace ringlab {

using namespace detail;

namespace {

void decode_triple(std::int64_t idx, std::int64_t n, Elem& a, Elem& b, Elem& c) {
  a = static_cast<Elem>(idx / (n * n));
  b = static_cast<Elem>((idx / n) % n);
  c = static_cast<Elem>(idx % n);
}

TheoremReport search_nonunique(const CheckContext& cx) {
  CheckRun run(cx, "search-nonunique-sided");
  const FiniteRing& r = *cx.ring;
  const auto n = static_cast<std::int64_t>(r.size());
  run.scan(n * n * n, [&](std::int64_t idx, CxSlot& slot) {
    Elem a, b, c;
    decode_triple(idx, n, a, b, c);
    const SidedSolutionSet L = sided_ann_inverses(r, a, b, c, AnnSide::kLann);
    if (L.solutions.size() >= 2)
      slot.add(cx_of(r, "lann-multiple-solutions",
                     {{"a", a}, {"b", b}, {"c", c},
                      {"x1", L.solutions[0]}, {"x2", L.solutions[1]}}));
    const SidedSolutionSet R = sided_ann_inverses(r, a, b, c, AnnSide::kRann);
    if (R.solutions.size() >= 2)
      slot.add(cx_of(r, "rann-multiple-solutions",
                     {{"a", a}, {"b", b}, {"c", c},
                      {"x1", R.solutions[0]}, {"x2", R.solutions[1]}}));
  });
  return run.finish();
}

TheoremReport search_nonregular(const CheckContext& cx) {
  CheckRun run(cx, "search-nonregular-sided");
  const FiniteRing& r = *cx.ring;
  const auto n = static_cast<std::int64_t>(r.size());
  run.scan(n * n * n, [&](std::int64_t idx, CxSlot& slot) {
    Elem a, b, c;
    decode_triple(idx, n, a, b, c);
    const SidedSolutionSet L = sided_ann_inverses(r, a, b, c, AnnSide::kLann);
    for (std::size_t i = 0; i < L.solutions.size(); ++i)
      if (!L.regular_flags[i]) {
        slot.add(cx_of(r, "lann-non-regular",
                       {{"a", a}, {"b", b}, {"c", c}, {"x", L.solutions[i]}}));
        break;
      }
    const SidedSolutionSet R = sided_ann_inverses(r, a, b, c, AnnSide::kRann);
    for (std::size_t i = 0; i < R.solutions.size(); ++i)
      if (!R.regular_flags[i]) {
        slot.add(cx_of(r, "rann-non-regular",
                       {{"a", a}, {"b", b}, {"c", c}, {"x", R.solutions[i]}}));
        break;
      }
  });
  return run.finish();
}

TheoremReport search_reverse_gap(const CheckContext& cx) {
  CheckRun run(cx, "search-reverse-order-gap");
  const FiniteRing& r = *cx.ring;
  const CertificateInventory& inv = *cx.inventory;
  const auto entries = extend_entries(r, inv.ann());
  const auto A = static_cast<std::int64_t>(entries.size());
  run.scan(A * A, [&](std::int64_t idx, CxSlot& slot) {
    const EntryExt& e1 = entries[static_cast<std::size_t>(idx / A)];
    const EntryExt& e2 = entries[static_cast<std::size_t>(idx % A)];
    const Elem p = r.mul(e1.a, e2.a);
    const Elem z = r.mul(e2.x, e1.x);
    if (inv.ann_witness(p, e2.b, e1.c) != std::optional<Elem>(z)) return;
    const bool br1 = e1.xa == e1.ax && e1.c == e2.c;
    const bool br2 = e2.xa == e2.ax && e1.b == e2.b;
    const bool br3 = e1.xa == e2.ax;
    if (br1 || br2 || br3) return;
    Counterexample c;
    c.failed_clause = "reverse-order-holds-without-sufficiency-branch";
    c.vars = {{"a1", r.label(e1.a)}, {"b1", r.label(e1.b)}, {"c1", r.label(e1.c)},
              {"x1", r.label(e1.x)}, {"a2", r.label(e2.a)}, {"b2", r.label(e2.b)},
              {"c2", r.label(e2.c)}, {"x2", r.label(e2.x)}};
    slot.add(std::move(c));
  });
  return run.finish();
}

}  // namespace

TheoremReport search_counterexamples(const CheckContext& cx, SearchTarget target) {
  switch (target) {
    case SearchTarget::kNonUniqueSided: return search_nonunique(cx);
    case SearchTarget::kNonRegularSided: return search_nonregular(cx);
    case SearchTarget::kReverseOrderGap: return search_reverse_gap(cx);
  }
  throw std::invalid_argument("unknown search target");
}

const std::vector<CheckerInfo>& all_checkers() {
  static const std::vector<CheckerInfo> kRegistry = [] {
    std::vector<CheckerInfo> v;
    v.push_back({"ann-uniqueness", check_uniqueness, false});
    v.push_back({"sided-composition", check_sided_composition, false});
    v.push_back({"sided-propositions", check_sided_propositions, false});
    v.push_back({"faithful-uniqueness", check_faithful_uniqueness, false});
    v.push_back({"drazin-regularization", check_drazin_regularization, false});
    v.push_back({"drazin-ann-equivalence", check_drazin_ann_equivalence, false});
    v.push_back({"intertwine-ann", check_intertwining_ann, false});
    v.push_back({"intertwine-bc", check_intertwining_bc, false});
    v.push_back({"centralizer-sufficiency", check_centralizer_sufficiency, false});
    v.push_back({"intertwine-variants-ann",
                 [](const CheckContext& c) {
                   return check_intertwine_variants(c, CertFlavor::kAnn);
                 },
                 false});
    v.push_back({"intertwine-variants-bc",
                 [](const CheckContext& c) {
                   return check_intertwine_variants(c, CertFlavor::kBc);
                 },
                 false});
    v.push_back({"absorption", check_absorption, false});
    v.push_back({"reverse-order-ann",
                 [](const CheckContext& c) {
                   return check_reverse_order(c, CertFlavor::kAnn);
                 },
                 false});
    v.push_back({"reverse-order-bc",
                 [](const CheckContext& c) {
                   return check_reverse_order(c, CertFlavor::kBc);
                 },
                 false});
    v.push_back({"cline", check_cline, false});
    v.push_back({"search-nonunique-sided",
                 [](const CheckContext& c) {
                   return search_counterexamples(c, SearchTarget::kNonUniqueSided);
                 },
                 true});
    v.push_back({"search-nonregular-sided",
                 [](const CheckContext& c) {
                   return search_counterexamples(c, SearchTarget::kNonRegularSided);
                 },
                 true});
    v.push_back({"search-reverse-order-gap",
                 [](const CheckContext& c) {
                   return search_counterexamples(c, SearchTarget::kReverseOrderGap);
                 },
                 true});
    return v;
  }();
  return kRegistry;
}

}  // namespace ringlab
