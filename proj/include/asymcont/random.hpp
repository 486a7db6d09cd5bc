#pragma once

// Seeded samplers used by property tests and ball sampling.

#include <cstdint>
#include <random>

#include "asymcont/linalg.hpp"

namespace asymcont {

using Rng = std::mt19937_64;

/// Generator for stream `index` of a run seeded with `seed`. Streams are
/// independent of evaluation order, so parallel sweeps stay reproducible.
Rng make_rng(std::uint64_t seed, std::uint64_t index = 0);

/// d x d matrix of independent standard complex normal entries.
CMatrix ginibre(int rows, int cols, Rng& rng);

/// G G^dagger / tr, G Ginibre: full rank, unitarily invariant.
DensityMatrix random_density(int dim_a, int dim_b, Rng& rng);

PureState random_pure(int dim_a, int dim_b, Rng& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
CMatrix random_unitary(int d, Rng& rng);

/// Product pure state |a>|b>.
PureState random_product_pure(int dim_a, int dim_b, Rng& rng);

/// Convex mixture of `terms` random product pure states with random weights.
DensityMatrix random_separable(int dim_a, int dim_b, int terms, Rng& rng);

}  // namespace asymcont
