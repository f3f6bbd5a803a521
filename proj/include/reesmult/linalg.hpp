#pragma once

#include <vector>

#include "reesmult/numeric.hpp"

namespace reesmult {

// Exact solution of a square nonsingular system M x = b over the rationals
// (fraction-free Bareiss elimination on the cleared-denominator matrix).
// Throws errc::internal on a singular matrix: the callers only build
// unisolvent collocation systems, so singularity means a programming error.
std::vector<Rat> solve_exact(std::vector<std::vector<Rat>> M, std::vector<Rat> b);

}  // namespace reesmult
