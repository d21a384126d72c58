// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#pragma once

#include "dib/model/channel.hpp"
#include "dib/numerics/settings.hpp"

namespace dib {

/// Upper bound obtained when the relays cooperate and the destination knows
/// both channels: the system becomes one two-antenna relay with budget
/// C1 + C2, whose single eigenvalue lambda has density lambda e^-lambda.
///
/// With the water level nu the bound is
///   R = int_{nu s}^inf [log2(1 + lambda/s) - log2(1 + nu)] lambda e^-lambda
/// where s = sigma^2 and nu solves
///   int_{nu s}^inf log2(lambda / (nu s)) lambda e^-lambda = C1 + C2.
struct UpperBoundResult
{
    double rate = 0.0;
    double nu = 0.0;                    // +inf when C1 + C2 = 0
    double constraint_residual = 0.0;   // spent budget minus C1 + C2
};

UpperBoundResult upper_bound(const SystemConfig &config, const SolverSettings &settings);

/// Budget (bits) spent at water level nu; the left side of the nu equation.
double spent_budget(double nu, double noise_power);

/// Bound value (bits) at water level nu.
double bound_at_level(double nu, double noise_power);

} // namespace dib
