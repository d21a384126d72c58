// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#include "dib/model/channel.hpp"
#include "dib/errors.hpp"

#include <cmath>

namespace dib {

void SystemConfig::validate() const
{
    if (!(noise_power > 0.0) || !std::isfinite(noise_power))
        throw InvalidArgument("SystemConfig: noise_power must be finite and > 0");
    if (!(c1 >= 0.0) || !std::isfinite(c1) || !(c2 >= 0.0) || !std::isfinite(c2))
        throw InvalidArgument("SystemConfig: budgets must be finite and >= 0");
}

SnrPair snr_pair(const ChannelState &state, const SystemConfig &config)
{
    return {state.gain1() / config.noise_power, state.gain2() / config.noise_power};
}

ChannelState sample_state(RandomSource &source, const SystemConfig &config)
{
    config.validate();
    const double sd = std::sqrt(0.5);
    ChannelState state;
    state.s1 = {source.normal(sd), source.normal(sd)};
    state.s2 = {source.normal(sd), source.normal(sd)};
    return state;
}

double eigen_density(double lambda)
{
    if (!(lambda >= 0.0))
        throw DomainError("eigen_density: lambda must be >= 0");
    return lambda * std::exp(-lambda);
}

double xi_quantile(double p)
{
    if (!(p > 0.0 && p < 1.0))
        throw DomainError("xi_quantile: p must lie in (0, 1)");
    return -1.0 / std::log(p);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

} // namespace dib
