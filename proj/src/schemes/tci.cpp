// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#include "dib/schemes/tci.hpp"
#include "dib/bounds/fixed_rate.hpp"
#include "dib/errors.hpp"
#include "dib/numerics/special.hpp"

#include <cmath>

namespace dib {

namespace {

constexpr int kSweepPoints = 20;

double binary_entropy(double p)
{
    auto term = [](double q) { return q > 0.0 ? -q * std::log2(q) : 0.0; };
    return term(p) + term(1.0 - p);
}

TciPoint best_of(const std::vector<TciPoint> &points)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i].rate > points[best].rate)
            best = i;
    return points[best];
}

TciPoint sweep(const SystemConfig &config, const SolverSettings &settings, bool parallel)
{
    const std::vector<double> thresholds = tci_thresholds();
    std::vector<TciPoint> points(thresholds.size());
    const int n = static_cast<int>(thresholds.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 0; i < n; ++i)
        points[i] = tci_rate(thresholds[i], config, settings);
    return best_of(points);
}

} // namespace

TciRelayStats conditional_stats(double threshold, const SystemConfig &config)
{
    if (!(threshold > 0.0) || !std::isfinite(threshold))
        throw DomainError("conditional_stats: threshold must be finite and > 0");
    config.validate();
    const double t = threshold * threshold;
    TciRelayStats s;
    s.p_active = std::exp(-t);
    s.header_bits = binary_entropy(s.p_active);
    // E[1/g | g >= t] for unit-mean exponential g is e^t E1(t).
    s.cond_noise = config.noise_power * scaled_exp_integral_e1(t);
    s.cond_snr = 1.0 / s.cond_noise;
    return s;
}

TciPoint tci_rate(const std::array<double, 2> &thresholds, const SystemConfig &config,
                  const SolverSettings &settings)
{
    TciPoint out;
    out.thresholds = thresholds;
    const std::array<double, 2> link{config.c1, config.c2};
    for (int k = 0; k < 2; ++k)
    {
        out.relay[k] = conditional_stats(thresholds[k], config);
        const TciRelayStats &s = out.relay[k];
        out.budgets[k] = std::max(0.0, (link[k] - s.header_bits) / s.p_active);
    }
    const TciRelayStats &a = out.relay[0];
    const TciRelayStats &b = out.relay[1];

    out.rate_only1 = one_relay_rate(a.cond_snr, out.budgets[0]);
    out.rate_only2 = one_relay_rate(b.cond_snr, out.budgets[1]);
    out.rate_both = fixed_rate({a.cond_snr, b.cond_snr}, out.budgets, settings).rate;
    out.rate = a.p_active * (1.0 - b.p_active) * out.rate_only1 +
               (1.0 - a.p_active) * b.p_active * out.rate_only2 +
               a.p_active * b.p_active * out.rate_both;
    return out;
}

TciPoint tci_rate(double threshold, const SystemConfig &config, const SolverSettings &settings)
{
    return tci_rate({threshold, threshold}, config, settings);
}

std::vector<double> tci_thresholds()
{
    std::vector<double> t(kSweepPoints);
    for (int i = 0; i < kSweepPoints; ++i)
        t[i] = (i + 1) / 10.0;
    return t;
}

TciPoint tci_best(const SystemConfig &config, const SolverSettings &settings)
{
    return sweep(config, settings, true);
}

TciPoint tci_best_serial(const SystemConfig &config, const SolverSettings &settings)
{
    return sweep(config, settings, false);
}

} // namespace dib
