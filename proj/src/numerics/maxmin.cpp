// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#include "dib/numerics/maxmin.hpp"
#include "dib/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace dib {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kInvPhi = 0.6180339887498949;   // 1 / golden ratio
constexpr int kSeedPoints = 17;

// Budget beyond which extra link capacity changes the optimum by less than a
// double ulp: spending log2(1 + rho_1 + rho_2) + 120 bits leaves a 60-bit
// margin on every subset term while the rate deficit is below 2^-60.
constexpr double kBudgetHeadroom = 120.0;

double log2_1p(double x) { return std::log1p(x) / kLn2; }

// 1 - 2^-r, accurate for small r.
double one_minus_pow2(double r) { return -std::expm1(-r * kLn2); }

// The search runs on 2^objective. With y_k = 2^-r_k every subset term becomes
// bilinear in (y_1, y_2):
//   none  : 1 + rho1 (1 - y1) + rho2 (1 - y2)
//   only1 : 2^C1 y1 (1 + rho2 (1 - y2))
//   only2 : 2^C2 y2 (1 + rho1 (1 - y1))
//   both  : 2^(C1+C2) y1 y2
// so no logarithms are needed inside the loop.
struct Instance
{
    double rho1, rho2, c1, c2;
    double pow_c1, pow_c2;   // 2^C1, 2^C2
};

Instance make_instance(double rho1, double rho2, double c1, double c2)
{
    const double cap = log2_1p(rho1 + rho2) + kBudgetHeadroom;
    Instance p{rho1, rho2, std::min(c1, cap), std::min(c2, cap), 0.0, 0.0};
    p.pow_c1 = std::exp2(p.c1);
    p.pow_c2 = std::exp2(p.c2);
    return p;
}

struct Point
{
    double r1 = 0.0;
    double y2 = 1.0;
    double power = 1.0;   // 2^value
};

double power_at(const Instance &p, double y1, double gain1, double y2)
{
    const double gain2 = p.rho2 * (1.0 - y2);
    const double none = 1.0 + gain1 + gain2;
    const double only1 = p.pow_c1 * y1 * (1.0 + gain2);
    const double only2 = p.pow_c2 * y2 * (1.0 + gain1);
    const double both = p.pow_c1 * p.pow_c2 * y1 * y2;
    return std::min({none, only1, only2, both});
}

// For fixed r1 the terms split into an increasing envelope in r2,
// min(none, only1), and a decreasing one, min(only2, both). The maximiser is
// their crossing clamped to the box; both candidate crossings are linear in y2.
Point best_for_r1(const Instance &p, double r1)
{
    const double y1 = std::exp2(-r1);
    const double gain1 = p.rho1 * one_minus_pow2(r1);
    double y2 = 1.0;
    if (p.rho2 > 0.0 && p.c2 > 0.0)
    {
        const double slack = p.pow_c1 * y1;               // 2^(C1 - r1)
        const double level = p.pow_c2 * std::min(1.0 + gain1, slack);
        const double y_none = (1.0 + gain1 + p.rho2) / (level + p.rho2);
        const double y_only1 = (1.0 + p.rho2) * slack / (level + p.rho2 * slack);
        y2 = std::clamp(std::min(y_none, y_only1), 1.0 / p.pow_c2, 1.0);
    }
    return {r1, y2, power_at(p, y1, gain1, y2)};
}

struct Search
{
    Point best;
    int evaluations = 0;
};

Search maximise(const Instance &p, const SolverSettings &settings, bool canonical)
{
    Search out;
    if (p.rho1 == 0.0 || p.c1 == 0.0)
    {
        // Relay 1 contributes nothing, or has nothing to spend: r1 = 0.
        out.best = best_for_r1(p, 0.0);
        out.evaluations = 1;
        return out;
    }

    auto eval = [&](double r1) {
        ++out.evaluations;
        return best_for_r1(p, r1);
    };

    std::array<Point, kSeedPoints> seeds;
    int best_index = 0;
    for (int i = 0; i < kSeedPoints; ++i)
    {
        seeds[i] = eval(p.c1 * i / (kSeedPoints - 1));
        if (seeds[i].power > seeds[best_index].power)
            best_index = i;
    }
    Point best = seeds[best_index];

    // Concavity puts the maximum between the neighbours of the best seed.
    double a = seeds[std::max(best_index - 1, 0)].r1;
    double b = seeds[std::min(best_index + 1, kSeedPoints - 1)].r1;
    const double width_tol = std::max(1e-3 * settings.abs_tol, 1e-15) * std::max(1.0, p.c1);

    Point lo = eval(b - kInvPhi * (b - a));
    Point hi = eval(a + kInvPhi * (b - a));
    int steps = 0;
    while (b - a > width_tol)
    {
        if (++steps > settings.max_iter)
            throw NonConvergent("solve_maxmin: golden-section refinement exceeded " +
                                std::to_string(settings.max_iter) + " steps");
        if (lo.power >= hi.power)
        {
            b = hi.r1;
            hi = lo;
            lo = eval(b - kInvPhi * (b - a));
        }
        else
        {
            a = lo.r1;
            lo = hi;
            hi = eval(a + kInvPhi * (b - a));
        }
    }
    for (const Point &q : {lo, hi})
        if (q.power > best.power || (q.power == best.power && q.r1 < best.r1))
            best = q;

    if (canonical && best.r1 > 0.0)
    {
        // Leftmost r1 whose value is within 1e-14 bits (relative) of the
        // optimum. Level sets of a concave function are intervals.
        const double value = std::log2(best.power);
        const double threshold = std::exp2(value - 1e-14 * std::max(1.0, value));
        const Point origin = eval(0.0);
        if (origin.power >= threshold)
            best = origin;
        else
        {
            double left = 0.0;
            Point right = best;
            while (right.r1 - left > width_tol)
            {
                const Point mid = eval(0.5 * (left + right.r1));
                if (mid.power >= threshold)
                    right = mid;
                else
                    left = mid.r1;
            }
            best = right;
        }
    }
    out.best = best;
    return out;
}

double value_of(const Point &q) { return std::max(0.0, std::log2(q.power)); }

} // namespace

void MaxMinProblem::validate() const
{
    if (snrs.empty())
        throw InvalidArgument("MaxMinProblem: no relays");
    if (snrs.size() != budgets.size())
        throw InvalidArgument("MaxMinProblem: snrs and budgets differ in length");
    for (std::size_t k = 0; k < snrs.size(); ++k)
    {
        if (!std::isfinite(snrs[k]) || snrs[k] < 0.0)
            throw InvalidArgument("MaxMinProblem: SNR must be finite and >= 0");
        if (!std::isfinite(budgets[k]) || budgets[k] < 0.0)
            throw InvalidArgument("MaxMinProblem: budget must be finite and >= 0");
    }
}

double maxmin_objective(const MaxMinProblem &problem, std::span<const double> r)
{
    const std::size_t K = problem.relay_count();
    if (r.size() != K)
        throw InvalidArgument("maxmin_objective: r has the wrong length");
    double result = INFINITY;
    for (unsigned subset = 0; subset < (1u << K); ++subset)
    {
        double received = 0.0;
        double spare = 0.0;
        for (std::size_t k = 0; k < K; ++k)
        {
            if (subset & (1u << k))
                spare += problem.budgets[k] - r[k];
            else
                received += problem.snrs[k] * (1.0 - std::exp2(-r[k]));
        }
        result = std::min(result, std::log2(1.0 + received) + spare);
    }
    return result;
}

MaxMinSolution solve_maxmin(const MaxMinProblem &problem, const SolverSettings &settings)
{
    problem.validate();
    if (problem.relay_count() != 2)
        throw InvalidArgument("solve_maxmin: only the two-relay problem is supported");
    const Instance p = make_instance(problem.snrs[0], problem.snrs[1], problem.budgets[0],
                                     problem.budgets[1]);
    const Search s = maximise(p, settings, true);
    MaxMinSolution out;
    out.value = value_of(s.best);
    out.r_opt = {s.best.r1, std::clamp(-std::log2(s.best.y2), 0.0, p.c2)};
    out.iterations = s.evaluations;
    return out;
}

double maxmin_value(double rho1, double rho2, double c1, double c2, const SolverSettings &settings)
{
    return value_of(maximise(make_instance(rho1, rho2, c1, c2), settings, false).best);
}

double maxmin_grid_oracle(const MaxMinProblem &problem, const SolverSettings &settings)
{
    problem.validate();
    if (problem.relay_count() != 2)
        throw InvalidArgument("maxmin_grid_oracle: only the two-relay problem is supported");
    const int n = settings.grid_points;

    // Per-axis pieces of the four subset terms; the lattice loop only has to
    // add them and take one logarithm.
    std::array<std::vector<double>, 2> gain, alone, spare;
    for (int k = 0; k < 2; ++k)
    {
        gain[k].resize(n);
        alone[k].resize(n);
        spare[k].resize(n);
        for (int i = 0; i < n; ++i)
        {
            const double r = problem.budgets[k] * i / (n - 1);
            gain[k][i] = problem.snrs[k] * (1.0 - std::exp2(-r));
            alone[k][i] = std::log2(1.0 + gain[k][i]);
            spare[k][i] = problem.budgets[k] - r;
        }
    }

    double best = -INFINITY;
#pragma omp parallel for reduction(max : best) schedule(static)
    for (int i = 0; i < n; ++i)
    {
        for (int j = 0; j < n; ++j)
        {
            const double value = std::min({std::log2(1.0 + gain[0][i] + gain[1][j]),
                                           alone[1][j] + spare[0][i],
                                           alone[0][i] + spare[1][j],
                                           spare[0][i] + spare[1][j]});
            best = std::max(best, value);
        }
    }
    return best;
}

} // namespace dib
