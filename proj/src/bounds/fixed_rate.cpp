// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#include "dib/bounds/fixed_rate.hpp"
#include "dib/errors.hpp"
#include "dib/numerics/maxmin.hpp"

#include <cmath>
#include <numbers>

namespace dib {

namespace {

constexpr double kActiveTol = 1e-6;

} // namespace

FixedRateResult fixed_rate(const SnrPair &snrs, const std::array<double, 2> &budgets,
                           const SolverSettings &settings)
{
    const MaxMinProblem problem{{snrs.rho1, snrs.rho2}, {budgets[0], budgets[1]}};
    const MaxMinSolution solution = solve_maxmin(problem, settings);

    FixedRateResult out;
    out.rate = solution.value;
    out.r_opt = {solution.r_opt[0], solution.r_opt[1]};

    const double r1 = out.r_opt[0], r2 = out.r_opt[1];
    const double gain1 = snrs.rho1 * -std::expm1(-r1 * std::numbers::ln2);
    const double gain2 = snrs.rho2 * -std::expm1(-r2 * std::numbers::ln2);
    const double spare1 = budgets[0] - r1, spare2 = budgets[1] - r2;
    const std::array<std::pair<const char *, double>, 4> terms{{
        {"{}", std::log2(1.0 + gain1 + gain2)},
        {"{1}", std::log2(1.0 + gain2) + spare1},
        {"{2}", std::log2(1.0 + gain1) + spare2},
        {"{1,2}", spare1 + spare2},
    }};
    for (const auto &[label, value] : terms)
        if (std::abs(value - out.rate) <= kActiveTol)
            out.active_subsets.emplace_back(label);
    return out;
}

double one_relay_rate(double rho, double c)
{
    if (!(rho >= 0.0) || !(c >= 0.0))
        throw InvalidArgument("one_relay_rate: rho and c must be >= 0");
    // log2((1 + rho) / (1 + rho 2^-c)) = log2(1 + rho (1 - 2^-c) / (1 + rho 2^-c))
    const double keep = std::exp2(-c);
    return std::log1p(rho * -std::expm1(-c * std::numbers::ln2) / (1.0 + rho * keep)) /
           std::numbers::ln2;
}

} // namespace dib
