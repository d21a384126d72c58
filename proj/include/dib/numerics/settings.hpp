// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>

namespace dib {

/// Tolerances, iteration caps, quadrature order, Monte Carlo sample count and
/// seed. Every numeric routine takes one of these; two runs with equal settings
/// produce identical results.
struct SolverSettings
{
    double abs_tol = 1e-9;
    int max_iter = 200;
    int quad_order = 64;          // Gauss-Laguerre node count of the first pass
    int grid_points = 400;        // lattice density per axis of the max-min oracle
    std::int64_t mc_samples = 1'000'000;
    std::uint64_t seed = 1;

    /// Throws InvalidArgument unless abs_tol > 0, max_iter >= 1,
    /// quad_order >= 8, grid_points >= 10 and mc_samples >= 1000.
    void validate() const;
};

} // namespace dib
