#include "ringlab/inverses.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ringlab {

const char* to_string(InverseKind k) {
  switch (k) {
    case InverseKind::kBc: return "bc";
    case InverseKind::kAlong: return "along";
    case InverseKind::kLeftBc: return "left-bc";
    case InverseKind::kRightBc: return "right-bc";
    case InverseKind::kAnnBc: return "ann-bc";
    case InverseKind::kLann: return "lann";
    case InverseKind::kRann: return "rann";
    case InverseKind::kMoorePenrose: return "mp";
    case InverseKind::kDrazin: return "drazin";
    case InverseKind::kCore: return "core";
  }
  return "?";
}

bool SidedSolutionSet::contains(Elem x) const {
  return std::binary_search(solutions.begin(), solutions.end(), x);
}

std::optional<bool> SidedSolutionSet::regular_flag_of(Elem x) const {
  const auto it = std::lower_bound(solutions.begin(), solutions.end(), x);
  if (it == solutions.end() || *it != x) return std::nullopt;
  return regular_flags[static_cast<std::size_t>(it - solutions.begin())];
}

namespace {

using Vars = std::vector<std::pair<std::string, std::string>>;

Vars vars_of(const FiniteRing& r,
             std::initializer_list<std::pair<const char*, Elem>> items) {
  Vars out;
  out.reserve(items.size());
  for (const auto& [sym, e] : items) out.emplace_back(sym, r.label(e));
  return out;
}

void flag(InverseCertificate& cert, const char* name) {
  cert.conditions.push_back({name, true});
}

}  // namespace

SolveResult bc_inverse(const FiniteRing& r, Elem a, Elem b, Elem c) {
  SolveResult res;
  const SubsetMask candidates = right_multiples(r, b) & left_multiples(r, c);
  candidates.for_each([&](Elem x) {
    if (r.mul3(x, a, b) == b && r.mul3(c, a, x) == c) res.witnesses.push_back(x);
  });

  if (res.witnesses.size() > 1) {
    res.violations.push_back(
        {"bc-inverse-multiplicity",
         vars_of(r, {{"a", a}, {"b", b}, {"c", c},
                     {"x1", res.witnesses[0]}, {"x2", res.witnesses[1]}})});
    return res;
  }

  if (res.witnesses.empty()) {
    // Verdict sensitivity: would the S^1 memberships admit a solution?
    const SubsetMask cand1 =
        right_multiples(r, b).with(b) & left_multiples(r, c).with(c);
    bool s1_found = false;
    cand1.for_each([&](Elem x) {
      if (!s1_found && r.mul3(x, a, b) == b && r.mul3(c, a, x) == c) s1_found = true;
    });
    if (s1_found) res.notes.push_back("s1-membership-form-would-admit-a-witness");
    return res;
  }

  const Elem x = res.witnesses[0];
  InverseCertificate cert;
  cert.kind = InverseKind::kBc;
  cert.a = a;
  cert.b = b;
  cert.c = c;
  cert.witness = x;
  flag(cert, "xab=b");
  flag(cert, "cax=c");
  flag(cert, "x in bS");
  flag(cert, "x in Sc");

  // The membership form must agree on the witness, and the outer law holds.
  if (!sandwich_set(r, b, x, Sandwich::kBSx).test(x) ||
      !sandwich_set(r, c, x, Sandwich::kXSc).test(x)) {
    res.violations.push_back(
        {"bc-membership-form-disagrees-on-witness",
         vars_of(r, {{"a", a}, {"b", b}, {"c", c}, {"x", x}})});
  }
  if (r.mul3(x, a, x) != x) {
    res.violations.push_back(
        {"bc-outer-law", vars_of(r, {{"a", a}, {"b", b}, {"c", c}, {"x", x}})});
  }
  res.cert = std::move(cert);
  return res;
}

SolveResult bc_inverse_membership_form(const FiniteRing& r, Elem a, Elem b, Elem c) {
  SolveResult res;
  for (Elem x = 0; x < r.size(); ++x) {
    if (r.mul3(x, a, b) != b || r.mul3(c, a, x) != c) continue;
    if (!sandwich_set(r, b, x, Sandwich::kBSx).test(x)) continue;
    if (!sandwich_set(r, c, x, Sandwich::kXSc).test(x)) continue;
    res.witnesses.push_back(x);
  }
  if (res.witnesses.size() > 1) {
    res.violations.push_back(
        {"bc-membership-form-multiplicity",
         vars_of(r, {{"a", a}, {"b", b}, {"c", c},
                     {"x1", res.witnesses[0]}, {"x2", res.witnesses[1]}})});
    return res;
  }
  if (res.witnesses.size() == 1) {
    InverseCertificate cert;
    cert.kind = InverseKind::kBc;
    cert.a = a;
    cert.b = b;
    cert.c = c;
    cert.witness = res.witnesses[0];
    flag(cert, "xab=b");
    flag(cert, "cax=c");
    flag(cert, "x in bSx");
    flag(cert, "x in xSc");
    res.cert = std::move(cert);
  }
  return res;
}

SolveResult inverse_along(const FiniteRing& r, Elem a, Elem d) {
  SolveResult res;
  const SubsetMask dS1 = right_multiples(r, d).with(d);
  const SubsetMask S1d = left_multiples(r, d).with(d);
  for (Elem x = 0; x < r.size(); ++x) {
    if (r.mul3(x, a, d) != d || r.mul3(d, a, x) != d) continue;
    if (!right_multiples(r, x).with(x).subset_of(dS1)) continue;
    if (!left_multiples(r, x).with(x).subset_of(S1d)) continue;
    res.witnesses.push_back(x);
  }
  if (res.witnesses.size() > 1) {
    res.violations.push_back(
        {"along-multiplicity",
         vars_of(r, {{"a", a}, {"d", d},
                     {"x1", res.witnesses[0]}, {"x2", res.witnesses[1]}})});
    return res;
  }

  // x is an inverse of a along d iff x is a (d,d)-inverse of a.
  SolveResult dd = bc_inverse(r, a, d, d);
  const bool here = res.witnesses.size() == 1;
  if (here != dd.found() ||
      (here && dd.found() && res.witnesses[0] != dd.cert->witness)) {
    Vars v = vars_of(r, {{"a", a}, {"d", d}});
    if (here) v.emplace_back("x_along", r.label(res.witnesses[0]));
    if (dd.found()) v.emplace_back("x_dd", r.label(dd.cert->witness));
    res.violations.push_back({"along-vs-dd-inverse", std::move(v)});
  }
  for (auto& viol : dd.violations) res.violations.push_back(std::move(viol));

  if (here) {
    InverseCertificate cert;
    cert.kind = InverseKind::kAlong;
    cert.a = a;
    cert.b = d;
    cert.c = d;
    cert.witness = res.witnesses[0];
    flag(cert, "xad=d");
    flag(cert, "dax=d");
    flag(cert, "xS1 in dS1");
    flag(cert, "S1x in S1d");
    res.cert = std::move(cert);
  }
  return res;
}

SidedSolutionSet sided_bc_inverses(const FiniteRing& r, Elem a, Elem b, Elem c,
                                   Side side) {
  SidedSolutionSet out;
  if (side == Side::kLeft) {
    const SubsetMask& Sc = left_multiples(r, c);
    for (Elem y = 0; y < r.size(); ++y)
      if (r.mul3(y, a, b) == b && Sc.test(y)) out.solutions.push_back(y);
  } else {
    const SubsetMask& bS = right_multiples(r, b);
    for (Elem y = 0; y < r.size(); ++y)
      if (r.mul3(c, a, y) == c && bS.test(y)) out.solutions.push_back(y);
  }
  out.regular_flags.reserve(out.solutions.size());
  for (Elem y : out.solutions) out.regular_flags.push_back(r.mul3(y, a, y) == y);
  return out;
}

SolveResult ann_bc_inverse(const FiniteRing& r, Elem a, Elem b, Elem c) {
  SolveResult res;
  const SubsetMask& lb = left_annihilator(r, b);   // °b
  const SubsetMask& rc = right_annihilator(r, c);  // c°
  for (Elem x = 0; x < r.size(); ++x) {
    // Cheapest conditions first; the mask inclusions come last.
    if (r.mul3(x, a, b) != b) continue;
    if (r.mul3(c, a, x) != c) continue;
    if (r.mul3(x, a, x) != x) continue;
    if (!lb.subset_of(left_annihilator(r, x))) continue;
    if (!rc.subset_of(right_annihilator(r, x))) continue;
    res.witnesses.push_back(x);
  }
  if (res.witnesses.size() > 1) {
    // Would falsify uniqueness; a hard counterexample, never swallowed.
    res.violations.push_back(
        {"ann-inverse-multiplicity",
         vars_of(r, {{"a", a}, {"b", b}, {"c", c},
                     {"x1", res.witnesses[0]}, {"x2", res.witnesses[1]}})});
    return res;
  }
  if (res.witnesses.size() == 1) {
    InverseCertificate cert;
    cert.kind = InverseKind::kAnnBc;
    cert.a = a;
    cert.b = b;
    cert.c = c;
    cert.witness = res.witnesses[0];
    flag(cert, "xax=x");
    flag(cert, "xab=b");
    flag(cert, "cax=c");
    flag(cert, "lann(b) in lann(x)");
    flag(cert, "rann(c) in rann(x)");
    res.cert = std::move(cert);
  }
  return res;
}

SidedSolutionSet sided_ann_inverses(const FiniteRing& r, Elem a, Elem b, Elem c,
                                    AnnSide side) {
  SidedSolutionSet out;
  if (side == AnnSide::kLann) {
    const SubsetMask& rc = right_annihilator(r, c);
    for (Elem x = 0; x < r.size(); ++x)
      if (r.mul3(x, a, b) == b && rc.subset_of(right_annihilator(r, x)))
        out.solutions.push_back(x);
  } else {
    const SubsetMask& lb = left_annihilator(r, b);
    for (Elem y = 0; y < r.size(); ++y)
      if (r.mul3(c, a, y) == c && lb.subset_of(left_annihilator(r, y)))
        out.solutions.push_back(y);
  }
  out.regular_flags.reserve(out.solutions.size());
  for (Elem x : out.solutions) out.regular_flags.push_back(r.mul3(x, a, x) == x);
  return out;
}

namespace {

bool is_lann(const FiniteRing& r, Elem a, Elem b, Elem c, Elem x) {
  return r.mul3(x, a, b) == b &&
         right_annihilator(r, c).subset_of(right_annihilator(r, x));
}

bool is_rann(const FiniteRing& r, Elem a, Elem b, Elem c, Elem y) {
  return r.mul3(c, a, y) == c &&
         left_annihilator(r, b).subset_of(left_annihilator(r, y));
}

}  // namespace

Elem compose_sided(const FiniteRing& r, Elem a, Elem b, Elem c, Elem x_l, Elem x_r) {
  if (!is_lann(r, a, b, c, x_l))
    throw std::invalid_argument("compose_sided: x_l is not a lann solution for (a,b,c)");
  if (!is_rann(r, a, b, c, x_r))
    throw std::invalid_argument("compose_sided: x_r is not a rann solution for (a,b,c)");
  return r.mul3(x_l, a, x_r);
}

SolveResult moore_penrose(const FiniteRing& r, Elem a) {
  if (!r.has_star())
    throw std::invalid_argument("moore_penrose requires a *-ring");
  SolveResult res;
  for (Elem x = 0; x < r.size(); ++x) {
    if (r.mul3(a, x, a) != a) continue;
    if (r.mul3(x, a, x) != x) continue;
    const Elem ax = r.mul(a, x), xa = r.mul(x, a);
    if (r.star(ax) != ax || r.star(xa) != xa) continue;
    res.witnesses.push_back(x);
  }
  if (res.witnesses.size() > 1) {
    res.violations.push_back(
        {"mp-multiplicity",
         vars_of(r, {{"a", a}, {"x1", res.witnesses[0]}, {"x2", res.witnesses[1]}})});
    return res;
  }

  // a is MP invertible iff a is ann-(a*,a*)-invertible, with the same witness.
  const Elem as = r.star(a);
  SolveResult ann = ann_bc_inverse(r, a, as, as);
  const bool here = res.witnesses.size() == 1;
  if (here != ann.found() ||
      (here && ann.found() && res.witnesses[0] != ann.cert->witness)) {
    Vars v = vars_of(r, {{"a", a}});
    if (here) v.emplace_back("mp", r.label(res.witnesses[0]));
    if (ann.found()) v.emplace_back("ann", r.label(ann.cert->witness));
    res.violations.push_back({"mp-vs-ann-star-star", std::move(v)});
  }
  for (auto& viol : ann.violations) res.violations.push_back(std::move(viol));

  if (here) {
    InverseCertificate cert;
    cert.kind = InverseKind::kMoorePenrose;
    cert.a = a;
    cert.b = as;
    cert.c = as;
    cert.witness = res.witnesses[0];
    flag(cert, "axa=a");
    flag(cert, "xax=x");
    flag(cert, "(ax)*=ax");
    flag(cert, "(xa)*=xa");
    res.cert = std::move(cert);
  }
  return res;
}

SolveResult drazin(const FiniteRing& r, Elem a) {
  SolveResult res;
  int index = 0;
  // Powers of a cycle within ring-size steps, so the least index is <= n.
  Elem am = a;  // a^m
  for (int m = 1; m <= r.size() && res.witnesses.empty(); ++m) {
    const Elem am1 = r.mul(am, a);  // a^{m+1}
    for (Elem x = 0; x < r.size(); ++x) {
      if (r.mul(am1, x) != am) continue;
      if (r.mul3(x, x, a) != x) continue;
      if (r.mul(a, x) != r.mul(x, a)) continue;
      res.witnesses.push_back(x);
    }
    if (!res.witnesses.empty()) index = m;
    am = am1;
  }
  if (res.witnesses.size() > 1) {
    res.violations.push_back(
        {"drazin-multiplicity",
         vars_of(r, {{"a", a}, {"x1", res.witnesses[0]}, {"x2", res.witnesses[1]}})});
    return res;
  }

  // Cross-check: Drazin invertibility coincides with ann-(a^m, a^m)
  // invertibility, witness for witness, least index for least index.
  std::optional<Elem> ann_witness;
  int ann_least = 0;
  for (int m = 1; m <= r.size() && !ann_witness.has_value(); ++m) {
    const Elem am2 = r.pow(a, m);
    SolveResult ann = ann_bc_inverse(r, a, am2, am2);
    for (auto& viol : ann.violations) res.violations.push_back(std::move(viol));
    if (ann.found()) {
      ann_witness = ann.cert->witness;
      ann_least = m;
    }
  }
  const bool here = res.witnesses.size() == 1;
  if (here != ann_witness.has_value() ||
      (here && ann_witness.has_value() &&
       (res.witnesses[0] != *ann_witness || index != ann_least))) {
    Vars v = vars_of(r, {{"a", a}});
    if (here) {
      v.emplace_back("drazin", r.label(res.witnesses[0]));
      v.emplace_back("drazin_index", std::to_string(index));
    }
    if (ann_witness.has_value()) {
      v.emplace_back("ann", r.label(*ann_witness));
      v.emplace_back("ann_least_m", std::to_string(ann_least));
    }
    res.violations.push_back({"drazin-vs-ann-power-sweep", std::move(v)});
  }

  if (here) {
    InverseCertificate cert;
    cert.kind = InverseKind::kDrazin;
    cert.a = a;
    cert.b = r.pow(a, index);
    cert.c = cert.b;
    cert.witness = res.witnesses[0];
    cert.drazin_index = index;
    flag(cert, "a^(m+1)x=a^m");
    flag(cert, "x^2a=x");
    flag(cert, "ax=xa");
    res.cert = std::move(cert);
  }
  return res;
}

SolveResult core_inverse(const FiniteRing& r, Elem a) {
  if (!r.has_star())
    throw std::invalid_argument("core_inverse requires a *-ring");
  SolveResult res = bc_inverse(r, a, a, r.star(a));
  if (res.cert.has_value()) res.cert->kind = InverseKind::kCore;
  return res;
}

std::optional<Elem> regularize_lann(const FiniteRing& r, Elem a, Elem b, Elem c,
                                    Elem x_l) {
  if (!is_lann(r, a, b, c, x_l))
    throw std::invalid_argument("regularize_lann: x_l is not a lann solution for (a,b,c)");
  SolveResult dz = drazin(r, r.mul(x_l, a));
  if (!dz.violations.empty())
    throw std::logic_error("regularize_lann: drazin solve reported a violation");
  if (!dz.found()) return std::nullopt;
  const Elem t = dz.cert->witness;
  const Elem reg = r.mul(t, x_l);
  if (!is_lann(r, a, b, c, reg) || r.mul3(reg, a, reg) != reg)
    throw std::logic_error("regularize_lann: t*x_l failed verification");
  return reg;
}

std::string certificate_to_json(const FiniteRing& r, const InverseCertificate& cert) {
  nlohmann::json j;
  j["kind"] = to_string(cert.kind);
  j["ring"] = r.name();
  j["a"] = r.label(cert.a);
  j["b"] = r.label(cert.b);
  j["c"] = r.label(cert.c);
  j["witness"] = r.label(cert.witness);
  nlohmann::json conds;
  for (const auto& f : cert.conditions) conds[f.name] = f.holds;
  j["conditions"] = std::move(conds);
  if (cert.drazin_index.has_value()) j["drazin_index"] = *cert.drazin_index;
  if (!cert.notes.empty()) j["notes"] = cert.notes;
  return j.dump();
}

std::string sided_set_to_json(const FiniteRing& r, Elem a, Elem b, Elem c,
                              const char* kind, const SidedSolutionSet& set) {
  nlohmann::json j;
  j["kind"] = kind;
  j["ring"] = r.name();
  j["a"] = r.label(a);
  j["b"] = r.label(b);
  j["c"] = r.label(c);
  nlohmann::json sols = nlohmann::json::array();
  for (std::size_t i = 0; i < set.solutions.size(); ++i) {
    nlohmann::json s;
    s["witness"] = r.label(set.solutions[i]);
    s["regular"] = static_cast<bool>(set.regular_flags[i]);
    sols.push_back(std::move(s));
  }
  j["solutions"] = std::move(sols);
  return j.dump();
}

}  // namespace ringlab
