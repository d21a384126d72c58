// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#include "dib/schemes/mmse.hpp"
#include "dib/errors.hpp"
#include "dib/numerics/quadrature.hpp"
#include "dib/numerics/random.hpp"
#include "dib/numerics/special.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace dib {

namespace {

struct BatchSums
{
    double mean = 0.0;
    double m2 = 0.0;   // sum of squared deviations from mean
    std::int64_t count = 0;
};

double draw_gain(RandomSource &rng, FadingLaw law)
{
    return law == FadingLaw::rayleigh ? rng.exponential() : 1.0;
}

BatchSums run_batch(const MmseCalibration &cal, double s, std::uint64_t seed, std::int64_t batch,
                    std::int64_t count, FadingLaw law)
{
    RandomSource rng = RandomSource::substream(seed, static_cast<std::uint64_t>(batch));
    BatchSums out;
    for (std::int64_t i = 0; i < count; ++i)
    {
        const double g1 = draw_gain(rng, law);
        const double g2 = draw_gain(rng, law);
        const double u1 = g1 / (g1 + s);
        const double u2 = g2 / (g2 + s);
        const double v1 = u1 * s / (g1 + s) + cal.distortion[0];
        const double v2 = u2 * s / (g2 + s) + cal.distortion[1];
        // det([u1^2, u1 u2; u1 u2, u2^2] + diag(v1, v2))
        const double det = u1 * u1 * v2 + u2 * u2 * v1 + v1 * v2;
        const double x = std::log2(det);
        ++out.count;
        const double delta = x - out.mean;
        out.mean += delta / static_cast<double>(out.count);
        out.m2 += delta * (x - out.mean);
    }
    return out;
}

JointTerm joint_impl(const MmseCalibration &cal, const SystemConfig &config,
                     const SolverSettings &settings, FadingLaw law, bool parallel)
{
    settings.validate();
    const std::int64_t n = settings.mc_samples;
    const std::int64_t batches = (n + kMmseBatchSize - 1) / kMmseBatchSize;
    std::vector<BatchSums> parts(static_cast<std::size_t>(batches));
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t b = 0; b < batches; ++b)
    {
        const std::int64_t count = std::min(kMmseBatchSize, n - b * kMmseBatchSize);
        parts[b] = run_batch(cal, config.noise_power, settings.seed, b, count, law);
    }

    // Pairwise merge of batch statistics, always in batch order.
    BatchSums total;
    for (const BatchSums &p : parts)
    {
        const double na = static_cast<double>(total.count);
        const double nb = static_cast<double>(p.count);
        const double delta = p.mean - total.mean;
        total.count += p.count;
        total.mean += delta * nb / (na + nb);
        total.m2 += p.m2 + delta * delta * na * nb / (na + nb);
    }
    const double dn = static_cast<double>(n);
    const double var = total.m2 / (dn - 1.0);
    return {total.mean, 1.96 * std::sqrt(var / dn)};
}

// E_t[log2(a t + b)] for unit-mean exponential t.
double marginal_term(double a, double b, const SolverSettings &settings)
{
    if (a <= 0.0)
        return std::log2(b);
    return integrate_semiinfinite(
        [a, b](double t) { return std::log2(a * t + b) * std::exp(-t); }, 0.0, settings);
}

} // namespace

MmseCalibration calibrate(const SystemConfig &config, const SolverSettings &settings,
                          FadingLaw law)
{
    config.validate();
    settings.validate();
    if (config.c1 == 0.0 || config.c2 == 0.0)
        throw DegenerateBudget("calibrate: a zero link budget makes the distortion infinite");

    const double s = config.noise_power;
    double u_mean, u_var, shaped;   // shaped = E[U s / (g + s)]
    if (law == FadingLaw::unit_constant)
    {
        u_mean = 1.0 / (1.0 + s);
        u_var = 0.0;
        shaped = u_mean * s / (1.0 + s);
    }
    else
    {
        // With e = e^s E1(s):  E[1/(g+s)] = e,  E[1/(g+s)^2] = 1/s - e, hence
        //   E[U]              = 1 - s e
        //   Var(U)            = s (1 - s e (1 + e))
        //   E[U s / (g + s)]  = (s + s^2) e - s
        const double e = scaled_exp_integral_e1(s);
        u_mean = 1.0 - s * e;
        u_var = std::max(0.0, s * (1.0 - s * e * (1.0 + e)));
        shaped = s * ((1.0 + s) * e - 1.0);
    }

    MmseCalibration cal;
    const std::array<double, 2> link{config.c1, config.c2};
    for (int k = 0; k < 2; ++k)
    {
        cal.est_power[k] = u_mean;
        cal.u_mean[k] = u_mean;
        cal.u_var[k] = u_var;
        cal.distortion[k] = u_mean / std::expm1(link[k] * std::numbers::ln2);
        cal.v_mean[k] = shaped + cal.distortion[k];
    }
    return cal;
}

JointTerm joint_term(const MmseCalibration &cal, const SystemConfig &config,
                     const SolverSettings &settings, FadingLaw law)
{
    return joint_impl(cal, config, settings, law, true);
}

JointTerm joint_term_serial(const MmseCalibration &cal, const SystemConfig &config,
                            const SolverSettings &settings, FadingLaw law)
{
    return joint_impl(cal, config, settings, law, false);
}

MmseResult mmse_rate(const SystemConfig &config, const SolverSettings &settings, FadingLaw law)
{
    MmseResult out;
    try
    {
        out.calibration = calibrate(config, settings, law);
    }
    catch (const DegenerateBudget &e)
    {
        out.diagnostic = e.what();
        return out;
    }
    const MmseCalibration &cal = out.calibration;
    const JointTerm joint = joint_term(cal, config, settings, law);
    double rate = joint.mean;
    for (int k = 0; k < 2; ++k)
    {
        rate -= marginal_term(cal.u_var[k], cal.v_mean[k], settings);
        out.constraint_check[k] = std::log2(1.0 + cal.est_power[k] / cal.distortion[k]);
    }
    out.rate = rate;
    out.mc_halfwidth = joint.halfwidth;
    return out;
}

} // namespace dib
