// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#include "dib/experiments/verify.hpp"
#include "dib/bounds/fixed_rate.hpp"
#include "dib/bounds/upper_bound.hpp"
#include "dib/model/channel.hpp"
#include "dib/numerics/maxmin.hpp"
#include "dib/numerics/quadrature.hpp"
#include "dib/numerics/random.hpp"
#include "dib/numerics/special.hpp"
#include "dib/schemes/mmse.hpp"
#include "dib/schemes/qci.hpp"
#include "dib/schemes/tci.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace dib {

namespace {

constexpr int kOracleGrid = 3000;
constexpr double kOracleGate = 1e-3;

std::string fmt(const char *f, double a, double b = 0.0)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

VerifyCheck solver_vs_lattice(const SolverSettings &settings)
{
    SolverSettings dense = settings;
    dense.grid_points = std::max(settings.grid_points, kOracleGrid);
    RandomSource rng(settings.seed);
    double worst = 0.0, lowest = 0.0;
    for (int i = 0; i < 20; ++i)
    {
        const MaxMinProblem p{{100.0 * rng.uniform(), 100.0 * rng.uniform()},
                              {10.0 * rng.uniform(), 10.0 * rng.uniform()}};
        const double d = solve_maxmin(p, settings).value - maxmin_grid_oracle(p, dense);
        worst = std::max(worst, std::abs(d));
        lowest = std::min(lowest, d);
    }
    return {"solver vs lattice oracle", worst <= kOracleGate && lowest >= -1e-6,
            fmt("max |diff| %.3g, min diff %.3g", worst, lowest)};
}

VerifyCheck quantile_monte_carlo(const SolverSettings &settings)
{
    const int J = 4;
    const QuantizationGrid grid = build_grid(J, {1.0, 10.0, 10.0});
    RandomSource rng(settings.seed);
    std::vector<std::int64_t> below(J - 1, 0);
    const std::int64_t n = settings.mc_samples;
    for (std::int64_t i = 0; i < n; ++i)
    {
        const double xi = 1.0 / rng.exponential();
        for (int j = 0; j + 1 < J; ++j)
            below[j] += xi <= grid.levels[j];
    }
    double worst = 0.0;
    for (int j = 0; j + 1 < J; ++j)
    {
        const double p = (j + 1.0) / J;
        const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
        worst = std::max(worst, std::abs(static_cast<double>(below[j]) / n - p) / se);
    }
    return {"quantile levels vs Monte Carlo", worst <= 3.0,
            fmt("worst deviation %.2f standard errors", worst)};
}

VerifyCheck tci_monte_carlo(const SolverSettings &settings)
{
    const SystemConfig config{1.0, 10.0, 10.0};
    const double threshold = 1.0;
    const TciRelayStats s = conditional_stats(threshold, config);
    RandomSource rng(settings.seed);
    double sum = 0.0, sum_sq = 0.0;
    std::int64_t kept = 0;
    for (std::int64_t i = 0; i < settings.mc_samples; ++i)
    {
        const double g = rng.exponential();
        if (g < threshold * threshold)
            continue;
        const double x = config.noise_power / g;
        sum += x;
        sum_sq += x * x;
        ++kept;
    }
    const double mean = sum / kept;
    const double se = std::sqrt((sum_sq / kept - mean * mean) / kept);
    const double z = std::abs(mean - s.cond_noise) / se;
    return {"TCI conditional noise vs Monte Carlo", z <= 3.0,
            fmt("%.2f standard errors", z)};
}

VerifyCheck e1_cross_check(const SolverSettings &settings)
{
    double worst = 0.0;
    for (double t : {0.5, 1.0, 2.0, 5.0})
    {
        const double q = integrate_semiinfinite([](double x) { return std::exp(-x) / x; }, t,
                                                settings);
        worst = std::max(worst, std::abs(q - exp_integral_e1(t)) / exp_integral_e1(t));
    }
    return {"E1 vs quadrature", worst <= 1e-8, fmt("worst relative error %.3g", worst)};
}

VerifyCheck one_relay(const SolverSettings &settings)
{
    RandomSource rng(settings.seed + 1);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i)
    {
        const double rho = 0.1 + 999.9 * rng.uniform();
        const double c = 0.1 + 14.9 * rng.uniform();
        const double expected = std::log2((1.0 + rho) / (1.0 + rho * std::exp2(-c)));
        worst = std::max(worst, std::abs(fixed_rate({rho, 0.0}, {c, 0.0}, settings).rate - expected));
    }
    return {"one-relay reduction", worst <= 1e-5, fmt("worst error %.3g", worst)};
}

VerifyCheck residuals(const SolverSettings &settings)
{
    double worst_ub = 0.0, worst_mmse = 0.0;
    for (double s : {1.0, 1e-2, 1e-4})
        for (double c : {0.5, 5.0, 20.0})
        {
            const SystemConfig config{s, c, c};
            worst_ub = std::max(worst_ub, std::abs(upper_bound(config, settings).constraint_residual));
            const MmseCalibration cal = calibrate(config, settings);
            worst_mmse = std::max(
                worst_mmse, std::abs(std::log2(1.0 + cal.est_power[0] / cal.distortion[0]) - c));
        }
    return {"constraint residuals", worst_ub <= 1e-6 && worst_mmse <= 1e-9,
            fmt("water level %.3g, MMSE calibration %.3g", worst_ub, worst_mmse)};
}

VerifyCheck determinism(const SolverSettings &settings, const VerifyOptions &options)
{
    SolverSettings small = settings;
    small.mc_samples = std::min<std::int64_t>(settings.mc_samples, 200'000);
    const SystemConfig config{1e-2, 5.0, 5.0};
    const MmseCalibration cal = calibrate(config, small);
    const JointTerm a = joint_term(cal, config, small);
    SolverSettings again = small;
    if (options.corrupt_seed_stream)
        again.seed = mix_seed(small.seed);
    const JointTerm b = joint_term(cal, config, again);
    const JointTerm c = joint_term_serial(cal, config, small);
    const bool same = a.mean == b.mean && a.halfwidth == b.halfwidth && a.mean == c.mean;
    return {"seed determinism", same, fmt("runs differ by %.3g", std::abs(a.mean - b.mean))};
}

} // namespace

std::vector<VerifyCheck> run_verification(const SolverSettings &settings,
                                          const VerifyOptions &options)
{
    settings.validate();
    std::vector<VerifyCheck> checks;
    auto guarded = [&](const char *name, auto &&fn) {
        try
        {
            checks.push_back(fn());
        }
        catch (const std::exception &e)
        {
            checks.push_back({name, false, std::string("threw: ") + e.what()});
        }
    };
    guarded("solver vs lattice oracle", [&] { return solver_vs_lattice(settings); });
    guarded("quantile levels vs Monte Carlo", [&] { return quantile_monte_carlo(settings); });
    guarded("TCI conditional noise vs Monte Carlo", [&] { return tci_monte_carlo(settings); });
    guarded("E1 vs quadrature", [&] { return e1_cross_check(settings); });
    guarded("one-relay reduction", [&] { return one_relay(settings); });
    guarded("constraint residuals", [&] { return residuals(settings); });
    guarded("seed determinism", [&] { return determinism(settings, options); });
    return checks;
}

int print_verification(const std::vector<VerifyCheck> &checks, std::ostream &out)
{
    bool ok = true;
    for (const VerifyCheck &c : checks)
    {
        char line[256];
        std::snprintf(line, sizeof line, "%-4s  %-38s %s\n", c.passed ? "PASS" : "FAIL",
                      c.name.c_str(), c.detail.c_str());
        out << line;
        ok = ok && c.passed;
    }
    return ok ? 0 : 1;
}

} // namespace dib
