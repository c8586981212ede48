#pragma once

#include <string>

#include "ringlab/ring.hpp"

namespace ringlab {

/// Canonical JSON form:
/// {"name": str, "size": int, "add": [[int]], "mul": [[int]], "zero": int,
///  "one": int|null, "star": [int]|null, "labels": [str]}
/// Serialization is compact with sorted keys, so save -> load -> save is
/// byte-identical.
std::string ring_to_json(const FiniteRing& r);

/// Parses and fully re-validates (all axioms). Throws std::runtime_error
/// with the failing axiom and witness on a corrupted file.
FiniteRing ring_from_json(const std::string& text);

void save_ring(const FiniteRing& r, const std::string& path);
FiniteRing load_ring(const std::string& path);

}  // namespace ringlab
