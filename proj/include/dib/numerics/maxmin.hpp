// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#pragma once

#include "dib/numerics/settings.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace dib {

/// Fixed-channel max-min rate problem: maximise over r in the box
/// [0, C_1] x ... x [0, C_K] the minimum over relay subsets T of
///
///   log2(1 + sum_{k not in T} rho_k (1 - 2^-r_k)) + sum_{k in T} (C_k - r_k).
struct MaxMinProblem
{
    std::vector<double> snrs;      // rho_k, linear
    std::vector<double> budgets;   // C_k, bits per complex dimension

    std::size_t relay_count() const { return snrs.size(); }

    /// Throws InvalidArgument on length mismatch, an empty problem, or any
    /// entry that is negative or non-finite.
    void validate() const;
};

struct MaxMinSolution
{
    double value = 0.0;            // bits per complex dimension, >= 0
    std::vector<double> r_opt;     // optimiser, lexicographically smallest found
    int iterations = 0;            // objective evaluations in the refinement
};

/// Min over all relay subsets of the max-min objective at r (any relay count).
double maxmin_objective(const MaxMinProblem &problem, std::span<const double> r);

/// Solves the two-relay problem.
///
/// The objective is concave on the box. For fixed r_1 the maximisation over
/// r_2 has a closed-form solution (crossing of the increasing and decreasing
/// envelopes), so the search reduces to a concave function of r_1. That
/// function is seeded on a coarse grid and refined by golden-section search.
/// Among optimisers the one with the smallest r_1 is reported.
///
/// Throws InvalidArgument if relay_count != 2, NonConvergent if the
/// refinement exceeds max_iter steps.
MaxMinSolution solve_maxmin(const MaxMinProblem &problem, const SolverSettings &settings);

/// Value-only fast path used in the inner loops of the schemes. Skips
/// validation and the tie-breaking pass of solve_maxmin.
double maxmin_value(double rho1, double rho2, double c1, double c2,
                    const SolverSettings &settings);

/// Exhaustive lattice maximum of the two-relay objective on a
/// grid_points x grid_points lattice over [0, C_1] x [0, C_2]. Independent of
/// solve_maxmin; intended as its oracle.
double maxmin_grid_oracle(const MaxMinProblem &problem, const SolverSettings &settings);

} // namespace dib
