// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#include "dib/bounds/upper_bound.hpp"
#include "dib/errors.hpp"
#include "dib/numerics/roots.hpp"
#include "dib/numerics/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace dib {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr int kMaxBracketSteps = 200;

// Both integrals reduce to exponential integrals after one integration by
// parts against (lambda + 1) e^-lambda:
//   spent(a) ln 2 = e^-a + E1(a)                       with a = nu s
//   rate(a)  ln 2 = e^-a + (1 - s) e^s E1(a + s)
double spent_nats(double a) { return std::exp(-a) * (1.0 + scaled_exp_integral_e1(a)); }

double rate_nats(double a, double s)
{
    return std::exp(-a) * (1.0 + (1.0 - s) * scaled_exp_integral_e1(a + s));
}

} // namespace

double spent_budget(double nu, double noise_power)
{
    if (!(nu > 0.0) || !(noise_power > 0.0))
        throw DomainError("spent_budget: nu and noise_power must be positive");
    return spent_nats(nu * noise_power) / kLn2;
}

double bound_at_level(double nu, double noise_power)
{
    if (!(nu > 0.0) || !(noise_power > 0.0))
        throw DomainError("bound_at_level: nu and noise_power must be positive");
    return std::max(0.0, rate_nats(nu * noise_power, noise_power) / kLn2);
}

UpperBoundResult upper_bound(const SystemConfig &config, const SolverSettings &settings)
{
    config.validate();
    settings.validate();
    const double budget = config.c1 + config.c2;
    const double s = config.noise_power;
    if (budget == 0.0)
        return {0.0, std::numeric_limits<double>::infinity(), 0.0};

    // Search over x = ln nu; the spent budget falls monotonically in x.
    auto residual = [&](double x) { return spent_budget(std::exp(x), s) - budget; };
    double lo = std::log(1e-12);
    double hi = 0.0;
    for (int step = 0; residual(hi) > 0.0; ++step)
    {
        if (step == kMaxBracketSteps)
            throw BracketError("upper_bound: could not bracket the water level from above");
        hi += std::numbers::ln2;
    }
    for (int step = 0; residual(lo) < 0.0; ++step)
    {
        if (step == kMaxBracketSteps)
            throw BracketError("upper_bound: could not bracket the water level from below");
        lo -= 10.0;
    }

    const double x = bisect(residual, lo, hi, settings);
    UpperBoundResult out;
    out.nu = std::exp(x);
    out.rate = bound_at_level(out.nu, s);
    out.constraint_residual = residual(x);
    return out;
}

} // namespace dib
