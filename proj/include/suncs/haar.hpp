#pragma once

#include <random>

#include "suncs/fundamental.hpp"
#include "suncs/types.hpp"

namespace suncs {

/// Haar-distributed SU(n): orthonormalize a complex Gaussian matrix (QR with
/// the R-diagonal phase correction) and divide by the n-th root of the
/// determinant.
Matrix haar_random_su(int n, std::mt19937_64& rng);

Matrix random_hermitian(int n, std::mt19937_64& rng);

/// Uniform angle draw with xi in [margin, pi/2 - margin] and phi in [0, 2*pi).
AngleCoordinates random_angles(int n, std::mt19937_64& rng, double xi_margin = 0.0);

DecompositionTree random_tree(int n, std::mt19937_64& rng);

/// Random tree whose right factors are all trivial (identity subtrees).
DecompositionTree random_left_spine_tree(int n, std::mt19937_64& rng);

}  // namespace suncs
