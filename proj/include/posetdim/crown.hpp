#pragma once

#include "posetdim/poset.hpp"

namespace posetdim {

/// Crown with n minima and n maxima ("x1".."xn", "z1".."zn"); n = 1 is the
/// square on {x, a, b, z}.
Poset crown_poset(int n);

/// 1-based endpoints (x index, z index) of the crown cover numbered p,
/// p in 1..2n: cover 2i-1 is x_i < z_i, cover 2i is x_{i+1} < z_i.
std::pair<int, int> cover_endpoints(int n, int p);

/// The fixed three-word crown realizer; for n = 1 the third word repeats
/// the first.
Realizer crown_realizer(int n);

}  // namespace posetdim
