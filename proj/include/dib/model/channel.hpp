// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#pragma once

#include "dib/numerics/random.hpp"

#include <complex>

namespace dib {

// Problem instance. The source is CN(0, 1); the per-link SNR is 1 / noise_power.
struct SystemConfig
{
    double noise_power = 1.0;   // sigma^2
    double c1 = 0.0;            // bits per complex dimension
    double c2 = 0.0;

    void validate() const;      // InvalidArgument on a bad field
};

struct ChannelState
{
    std::complex<double> s1;
    std::complex<double> s2;

    double gain1() const { return std::norm(s1); }
    double gain2() const { return std::norm(s2); }
};

struct SnrPair
{
    double rho1 = 0.0;
    double rho2 = 0.0;
};

SnrPair snr_pair(const ChannelState &state, const SystemConfig &config);

// One CN(0, 1) coefficient per relay.
ChannelState sample_state(RandomSource &source, const SystemConfig &config);

// Density lambda e^-lambda of the nonzero eigenvalue of S S^H.
double eigen_density(double lambda);

// p-quantile of xi = |S|^-2, i.e. -1 / ln p.
double xi_quantile(double p);

double db_to_linear(double db);

} // namespace dib
