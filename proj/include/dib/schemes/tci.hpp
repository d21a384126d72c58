// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#pragma once

#include "dib/model/channel.hpp"
#include "dib/numerics/settings.hpp"

#include <array>
#include <vector>

namespace dib {

// Truncated channel inversion: a relay forwards its inverted observation only
// when |S| >= threshold and spends a one-flag header on the decision.

struct TciRelayStats
{
    double p_active = 0.0;      // P(|S| >= threshold) = exp(-threshold^2)
    double header_bits = 0.0;   // binary entropy of the flag
    double cond_noise = 0.0;    // E[sigma^2 / |S|^2 | |S| >= threshold]
    double cond_snr = 0.0;      // 1 / cond_noise
};

TciRelayStats conditional_stats(double threshold, const SystemConfig &config);

struct TciPoint
{
    std::array<double, 2> thresholds{};
    std::array<TciRelayStats, 2> relay{};
    std::array<double, 2> budgets{};   // max(0, (C_k - H_k) / P_k)
    double rate_only1 = 0.0;           // relay 1 active alone
    double rate_only2 = 0.0;
    double rate_both = 0.0;
    double rate = 0.0;                 // mixture over the activity pattern
};

TciPoint tci_rate(const std::array<double, 2> &thresholds, const SystemConfig &config,
                  const SolverSettings &settings);
TciPoint tci_rate(double threshold, const SystemConfig &config, const SolverSettings &settings);

// Shared thresholds 0.1, 0.2, ..., 2.0.
std::vector<double> tci_thresholds();

// Best point of the threshold sweep; ties go to the smaller threshold. The
// serial version evaluates the same points in order and returns the same point.
TciPoint tci_best(const SystemConfig &config, const SolverSettings &settings);
TciPoint tci_best_serial(const SystemConfig &config, const SolverSettings &settings);

} // namespace dib
