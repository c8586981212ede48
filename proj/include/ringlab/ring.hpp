#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ringlab {

/// Index of a ring element in [0, size).
using Elem = std::int32_t;

class SubsetStore;

/// A finite (possibly non-unital, possibly *-equipped) ring given by dense
/// addition and multiplication tables over element indices.
///
/// Immutable after construction and safe to share across concurrent readers;
/// the attached subset-mask cache is built lazily and is thread-safe.
class FiniteRing {
 public:
  /// Validates the structural basics (table shapes, index ranges, zero
  /// neutrality, existence of additive inverses, unique labels, the star
  /// laws when a star permutation is given) and locates the multiplicative
  /// identity by scanning. Throws std::invalid_argument when `one` is given
  /// and disagrees with the scan, or when any structural check fails.
  /// Full axiom validation (associativity, distributivity, ...) is the job
  /// of validate_axioms().
  FiniteRing(std::string name, int size, std::vector<Elem> add_table,
             std::vector<Elem> mul_table, Elem zero,
             std::optional<Elem> one, std::optional<std::vector<Elem>> star,
             std::vector<std::string> labels);

  FiniteRing(const FiniteRing& other);
  FiniteRing& operator=(const FiniteRing& other);
  FiniteRing(FiniteRing&&) noexcept;
  FiniteRing& operator=(FiniteRing&&) noexcept;
  ~FiniteRing();

  const std::string& name() const { return name_; }
  int size() const { return n_; }

  Elem add(Elem x, Elem y) const { return add_[static_cast<std::size_t>(x) * n_ + y]; }
  Elem mul(Elem x, Elem y) const { return mul_[static_cast<std::size_t>(x) * n_ + y]; }
  Elem mul3(Elem x, Elem y, Elem z) const { return mul(mul(x, y), z); }
  Elem neg(Elem x) const { return neg_[x]; }
  Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }

  Elem zero() const { return zero_; }
  std::optional<Elem> one() const { return one_; }
  bool is_unital() const { return one_.has_value(); }

  bool has_star() const { return star_.has_value(); }
  Elem star(Elem x) const { return (*star_)[x]; }

  /// a^e by repeated multiplication. Requires e >= 1: without an identity
  /// there is no a^0. Throws std::invalid_argument on e < 1.
  Elem pow(Elem a, int e) const;

  const std::string& label(Elem x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Exact-match label lookup; also accepts a decimal index string.
  std::optional<Elem> find_element(std::string_view text) const;

  const std::vector<Elem>& add_table() const { return add_; }
  const std::vector<Elem>& mul_table() const { return mul_; }
  const std::optional<std::vector<Elem>>& star_perm() const { return star_; }

  /// Lazily-built cache of subset masks (annihilators, multiple sets, ...).
  SubsetStore& subset_store() const { return *subsets_; }

 private:
  std::string name_;
  int n_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  Elem zero_ = 0;
  std::optional<Elem> one_;
  std::optional<std::vector<Elem>> star_;
  std::vector<std::string> labels_;
  mutable std::unique_ptr<SubsetStore> subsets_;

  void init_derived(std::optional<Elem> declared_one);
};

/// Outcome of one axiom scan.
struct AxiomCheck {
  std::string axiom;    // e.g. "mul-associative"
  bool passed = true;
  std::string witness;  // labels of the first failing tuple, empty on pass
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_passed() const;
  const AxiomCheck* first_failure() const;
  std::string summary() const;
};

/// Exhaustive check of every ring axiom (and the identity/star laws when
/// present). Failures are data, not errors. `workers` > 1 runs the cubic
/// scans in parallel; the reported witness (the first failing tuple in
/// index order) does not depend on the worker count.
AxiomReport validate_axioms(const FiniteRing& r, int workers = 1);

/// The multiplicative monoid R^1: a view of the ring with a formal identity
/// adjoined when the ring has none. Used only as a multiplier domain; the
/// formal element never appears inside ring-valued results.
class UnitalExtension {
 public:
  explicit UnitalExtension(const FiniteRing& r)
      : ring_(&r), formal_(!r.is_unital()) {}

  const FiniteRing& base() const { return *ring_; }
  bool has_formal_one() const { return formal_; }
  int monoid_size() const { return ring_->size() + (formal_ ? 1 : 0); }
  bool is_formal(int y) const { return formal_ && y == ring_->size(); }

  /// y * x for y in R^1, x in R.
  Elem act_left(int y, Elem x) const {
    return is_formal(y) ? x : ring_->mul(static_cast<Elem>(y), x);
  }
  /// x * y for x in R, y in R^1.
  Elem act_right(Elem x, int y) const {
    return is_formal(y) ? x : ring_->mul(x, static_cast<Elem>(y));
  }
  std::string label(int y) const {
    return is_formal(y) ? std::string("1") : ring_->label(static_cast<Elem>(y));
  }

 private:
  const FiniteRing* ring_;
  bool formal_;
};

inline UnitalExtension adjoin_identity(const FiniteRing& r) {
  return UnitalExtension(r);
}

}  // namespace ringlab
