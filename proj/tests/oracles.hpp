#pragma once

#include "s4bell/bounds.hpp"

namespace s4bell::testing {

/// Literal double enumeration of all 3^8 Alice x 3^8 Bob deterministic
/// assignments. Independent of the optimized classical_bound path; used as
/// its oracle. Roughly a second per orbit set.
int naive_classical_bound(const GroupTable& group, const OrbitSet& set);

}  // namespace s4bell::testing
