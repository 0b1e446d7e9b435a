#pragma once

#include <optional>
#include <vector>

#include "mldsurf/rational.hpp"

namespace mldsurf {

using RatMatrix = std::vector<std::vector<Rat>>;
using RatVector = std::vector<Rat>;

/// Exact determinant by Gaussian elimination with column pivoting.
Rat determinant(RatMatrix m);

/// Solves m * x = rhs exactly. Returns nullopt for singular systems.
std::optional<RatVector> solve_linear(RatMatrix m, RatVector rhs);

bool is_symmetric(const RatMatrix& m);

/// Sylvester-style test: a symmetric matrix is negative definite iff its
/// leading principal minors alternate in sign starting negative. Exact;
/// throws std::invalid_argument on non-symmetric input.
bool is_negative_definite(const RatMatrix& m);

}  // namespace mldsurf
