#pragma once

#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// Default element-count cap for constructed rings; override with the
/// RINGLAB_SIZE_CAP environment variable (read once per process).
int configured_size_cap();

/// Z_n with add/mul mod n. n = 1 gives the unital zero ring (one = zero).
FiniteRing make_zmod(int n, std::string name = {});

/// Full k×k matrix ring over Z_q. Element index encodes the entries as
/// row-major base-q digits; labels are row-major unit-matrix sums
/// ("e11+2e12", zero matrix is "0"). one is the identity matrix. A star
/// involution is NOT attached automatically; see transpose_permutation().
FiniteRing make_matrix_ring(int k, int q, std::string name = {});

/// The transpose map of make_matrix_ring(k, q) as an index permutation,
/// suitable for attach_involution.
std::vector<Elem> transpose_permutation(int k, int q);

/// Smallest subset of `ambient` containing `generators` and closed under
/// addition, additive inverse, and multiplication, re-indexed as a
/// standalone ring. Labels are the ambient labels. The identity and a star
/// (when the ambient has one and the closure is closed under it) are
/// recomputed, not inherited.
FiniteRing subring_closure(const FiniteRing& ambient,
                           const std::vector<Elem>& generators,
                           std::string name = {});

/// Componentwise product. one present iff both factors have one; likewise
/// star. Labels are "(l1,l2)".
FiniteRing make_direct_product(const FiniteRing& r1, const FiniteRing& r2,
                               std::string name = {});

/// Copy of r with `perm` installed as the star involution. Validates the
/// three involution laws and throws std::invalid_argument naming the first
/// failing pair otherwise.
FiniteRing attach_involution(const FiniteRing& r, const std::vector<Elem>& perm);

}  // namespace ringlab
