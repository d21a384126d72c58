// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#pragma once

#include "dib/model/channel.hpp"
#include "dib/numerics/settings.hpp"

#include <array>
#include <string>
#include <vector>

namespace dib {

/// Max-min rate of the diamond channel with both SNRs known and fixed.
struct FixedRateResult
{
    double rate = 0.0;
    std::array<double, 2> r_opt{};
    /// Subsets whose term is within 1e-6 of the rate at r_opt, drawn from
    /// "{}", "{1}", "{2}", "{1,2}". A subset lists the relays whose spare
    /// link capacity enters the term.
    std::vector<std::string> active_subsets;
};

FixedRateResult fixed_rate(const SnrPair &snrs, const std::array<double, 2> &budgets,
                           const SolverSettings &settings);

/// Rate of a single relay with SNR rho and budget c:
/// log2(1 + rho) - log2(1 + rho 2^-c).
double one_relay_rate(double rho, double c);

} // namespace dib
