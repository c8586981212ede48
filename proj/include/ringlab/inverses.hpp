#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/ring.hpp"
#include "ringlab/subsets.hpp"

namespace ringlab {

enum class InverseKind {
  kBc,
  kAlong,
  kLeftBc,
  kRightBc,
  kAnnBc,
  kLann,
  kRann,
  kMoorePenrose,
  kDrazin,
  kCore,
};

const char* to_string(InverseKind k);

struct ConditionFlag {
  std::string name;
  bool holds = false;
};

/// A claimed inverse together with the verified defining conditions.
/// Every flag is true in a certificate returned by a solver.
struct InverseCertificate {
  InverseKind kind = InverseKind::kBc;
  Elem a = 0, b = 0, c = 0;  // b=c=d for kAlong; b=c=a^m for kDrazin; b=a, c=a* for kCore
  Elem witness = 0;
  std::vector<ConditionFlag> conditions;
  std::optional<int> drazin_index;
  std::vector<std::string> notes;
};

/// An internal-consistency breach: an observation that would falsify one of
/// the identities the solvers rely on (uniqueness, the two defining forms
/// agreeing, a cross-solver correspondence). Never swallowed; callers must
/// surface these.
struct Violation {
  std::string clause;
  std::vector<std::pair<std::string, std::string>> vars;  // symbol -> label
};

struct SolveResult {
  std::optional<InverseCertificate> cert;
  std::vector<Elem> witnesses;         // all solutions the defining scan found
  std::vector<Violation> violations;   // non-empty means a falsifying observation
  std::vector<std::string> notes;      // e.g. the S^1 membership form differing
  bool found() const { return cert.has_value(); }
};

/// Solutions of a one-sided system, ascending by element index.
struct SidedSolutionSet {
  std::vector<Elem> solutions;
  std::vector<bool> regular_flags;  // x·a·x == x per solution
  bool contains(Elem x) const;
  std::optional<bool> regular_flag_of(Elem x) const;
  std::size_t size() const { return solutions.size(); }
};

enum class AnnSide { kLann, kRann };

/// (b,c)-inverse of a: the unique x with xab=b, cax=c, x ∈ bS, x ∈ Sc.
/// Scans bR ∩ Rc only. The returned witness is cross-checked against the
/// membership form (x ∈ bSx, x ∈ xSc) and the outer law xax=x; two distinct
/// solutions or a cross-check mismatch are reported as violations. When no
/// S-form solution exists but the S^1 memberships would admit one, a note
/// records that the verdict is form-sensitive.
SolveResult bc_inverse(const FiniteRing& r, Elem a, Elem b, Elem c);

/// Independent route: solves the membership form directly (xab=b, cax=c,
/// x ∈ bSx, x ∈ xSc) by full scan with sandwich sets. Kept separate from
/// bc_inverse so the two condition systems can be compared on every
/// instance.
SolveResult bc_inverse_membership_form(const FiniteRing& r, Elem a, Elem b, Elem c);

/// Inverse of a along d: xad=d, dax=d, xS¹ ⊆ dS¹, S¹x ⊆ S¹d, solved
/// directly; the result is cross-asserted to coincide with the
/// (d,d)-inverse.
SolveResult inverse_along(const FiniteRing& r, Elem a, Elem d);

/// Left: all y with yab=b and y ∈ Sc. Right: all y with cay=c and y ∈ bS.
SidedSolutionSet sided_bc_inverses(const FiniteRing& r, Elem a, Elem b, Elem c,
                                   Side side);

/// Annihilator (b,c)-inverse of a: the unique x with
///   xax=x, xab=b, cax=c, °b ⊆ °x, c° ⊆ x°.
/// Scans every element; multiple solutions would falsify uniqueness and are
/// reported as a violation, never silently.
SolveResult ann_bc_inverse(const FiniteRing& r, Elem a, Elem b, Elem c);

/// lann: x with xab=b and c° ⊆ x°. rann: y with cay=c and °b ⊆ °y.
SidedSolutionSet sided_ann_inverses(const FiniteRing& r, Elem a, Elem b, Elem c,
                                    AnnSide side);

/// x_l·a·x_r for a verified lann solution x_l and rann solution x_r of the
/// same (a,b,c); throws std::invalid_argument when the preconditions fail.
Elem compose_sided(const FiniteRing& r, Elem a, Elem b, Elem c, Elem x_l, Elem x_r);

/// Moore-Penrose inverse in a *-ring: the unique solution of
///   axa=a, xax=x, (ax)*=ax, (xa)*=xa.
/// Cross-asserted against ann_bc_inverse(a, a*, a*) (existence and value).
/// Throws std::invalid_argument when the ring has no star.
SolveResult moore_penrose(const FiniteRing& r, Elem a);

/// Drazin inverse: x with a^{m+1}x = a^m, x²a = x, ax = xa for the least
/// positive m (the index; invertible elements get index 1 under this
/// convention). Cross-asserted against the ann-(a^m, a^m) sweep.
SolveResult drazin(const FiniteRing& r, Elem a);

/// Core inverse in a *-ring: the (a, a*)-inverse of a.
SolveResult core_inverse(const FiniteRing& r, Elem a);

/// Given a verified lann solution x_l of (a,b,c): when x_l·a is Drazin
/// invertible with inverse t, returns t·x_l, a verified regular lann
/// solution; nullopt when x_l·a is not Drazin invertible. Throws
/// std::invalid_argument on a bad precondition and std::logic_error if the
/// construction fails verification (which would falsify the identity it
/// implements).
std::optional<Elem> regularize_lann(const FiniteRing& r, Elem a, Elem b, Elem c,
                                    Elem x_l);

/// Certificate serialization (element labels, kind, flags, index).
std::string certificate_to_json(const FiniteRing& r, const InverseCertificate& cert);
std::string sided_set_to_json(const FiniteRing& r, Elem a, Elem b, Elem c,
                              const char* kind, const SidedSolutionSet& set);

}  // namespace ringlab
