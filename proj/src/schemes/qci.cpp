// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#include "dib/schemes/qci.hpp"
#include "dib/bounds/fixed_rate.hpp"
#include "dib/errors.hpp"
#include "dib/numerics/maxmin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace dib {

namespace {

constexpr double kFdStep = 1e-4;
constexpr double kArmijo = 1e-4;
constexpr int kMaxHalvings = 60;

double weighted_row(const QuantizationGrid &grid, const Allocation &c, int k, int j,
                    double value, const SolverSettings &settings)
{
    Allocation trial = c;
    trial[k][j] = value;
    double sum = 0.0;
    for (int other = 0; other < grid.cells; ++other)
    {
        const int j1 = k == 0 ? j : other;
        const int j2 = k == 0 ? other : j;
        sum += grid.probs[other] * cell_rate(j1, j2, grid, trial, settings);
    }
    return grid.probs[j] * sum;
}

// d objective / d c[k][j] by central differences; forward near c = 0 where
// the central stencil would leave the feasible orthant.
double partial(const QuantizationGrid &grid, const Allocation &c, int k, int j,
               const SolverSettings &settings)
{
    const double x = c[k][j];
    if (x < kFdStep)
        return (weighted_row(grid, c, k, j, x + kFdStep, settings) -
                weighted_row(grid, c, k, j, x, settings)) /
               kFdStep;
    return (weighted_row(grid, c, k, j, x + kFdStep, settings) -
            weighted_row(grid, c, k, j, x - kFdStep, settings)) /
           (2.0 * kFdStep);
}

Allocation gradient(const QuantizationGrid &grid, const Allocation &c,
                    const SolverSettings &settings)
{
    const int interior = grid.cells - 1;
    Allocation g{std::vector<double>(grid.cells, 0.0), std::vector<double>(grid.cells, 0.0)};
#pragma omp parallel for schedule(dynamic)
    for (int v = 0; v < 2 * interior; ++v)
        g[v / interior][v % interior] = partial(grid, c, v / interior, v % interior, settings);
    return g;
}

double dot(const Allocation &a, const Allocation &b)
{
    double s = 0.0;
    for (int k = 0; k < 2; ++k)
        for (std::size_t j = 0; j < a[k].size(); ++j)
            s += a[k][j] * b[k][j];
    return s;
}

CellRates rates_impl(const QuantizationGrid &grid, const Allocation &c,
                     const SolverSettings &settings, bool parallel)
{
    const int J = grid.cells;
    CellRates out{J, std::vector<double>(static_cast<std::size_t>(J * J), 0.0)};
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int cell = 0; cell < J * J; ++cell)
        out.values[cell] = cell_rate(cell / J, cell % J, grid, c, settings);
    return out;
}

} // namespace

QuantizationGrid build_grid(int cells, const SystemConfig &config)
{
    if (cells < 2)
        throw InvalidArgument("build_grid: need at least two cells");
    config.validate();
    QuantizationGrid grid;
    grid.cells = cells;
    grid.levels.resize(cells);
    grid.snr_levels.resize(cells);
    grid.probs.assign(cells, 1.0 / cells);
    for (int j = 0; j + 1 < cells; ++j)
    {
        const double p = static_cast<double>(j + 1) / cells;
        grid.levels[j] = xi_quantile(p);
        grid.snr_levels[j] = -std::log(p) / config.noise_power;
    }
    grid.levels[cells - 1] = std::numeric_limits<double>::infinity();
    grid.snr_levels[cells - 1] = 0.0;
    grid.header_bits = std::log2(static_cast<double>(cells));
    grid.header_exceeds_budget = grid.header_bits > std::min(config.c1, config.c2);
    return grid;
}

double cell_rate(int j1, int j2, const QuantizationGrid &grid, const Allocation &c,
                 const SolverSettings &settings)
{
    const int last = grid.cells - 1;
    if (j1 < 0 || j2 < 0 || j1 > last || j2 > last)
        throw InvalidArgument("cell_rate: cell index out of range");
    if (j1 == last && j2 == last)
        return 0.0;
    if (j1 == last)
        return one_relay_rate(grid.snr_levels[j2], c[1][j2]);
    if (j2 == last)
        return one_relay_rate(grid.snr_levels[j1], c[0][j1]);
    return maxmin_value(grid.snr_levels[j1], grid.snr_levels[j2], c[0][j1], c[1][j2], settings);
}

CellRates cell_rates(const QuantizationGrid &grid, const Allocation &c,
                     const SolverSettings &settings)
{
    return rates_impl(grid, c, settings, true);
}

CellRates cell_rates_serial(const QuantizationGrid &grid, const Allocation &c,
                            const SolverSettings &settings)
{
    return rates_impl(grid, c, settings, false);
}

double qci_objective(const QuantizationGrid &grid, const Allocation &c,
                     const SolverSettings &settings)
{
    const CellRates rates = cell_rates(grid, c, settings);
    double sum = 0.0;
    for (int j1 = 0; j1 < grid.cells; ++j1)
        for (int j2 = 0; j2 < grid.cells; ++j2)
            sum += grid.probs[j1] * grid.probs[j2] * rates.at(j1, j2);
    return sum;
}

std::vector<double> project_weighted_simplex(const std::vector<double> &v,
                                             const std::vector<double> &w, double budget)
{
    const std::size_t n = v.size();
    if (w.size() != n || !(budget >= 0.0) ||
        std::any_of(w.begin(), w.end(), [](double wi) { return !(wi > 0.0); }))
        throw InvalidArgument("project_weighted_simplex: bad weights or budget");
    std::vector<double> x(n);
    double spent = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        x[i] = std::max(0.0, v[i]);
        spent += w[i] * x[i];
    }
    if (spent <= budget)
        return x;

    // x_i = max(0, v_i - tau w_i) with tau chosen so the budget is met. Walk
    // the breakpoints v_i / w_i in decreasing order.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return v[a] / w[a] > v[b] / w[b]; });
    double wv = 0.0, ww = 0.0, tau = 0.0;
    for (std::size_t m = 0; m < n; ++m)
    {
        const std::size_t i = order[m];
        wv += w[i] * v[i];
        ww += w[i] * w[i];
        tau = (wv - budget) / ww;
        if (m + 1 == n || tau >= v[order[m + 1]] / w[order[m + 1]])
            break;
    }
    for (std::size_t i = 0; i < n; ++i)
        x[i] = std::max(0.0, v[i] - tau * w[i]);
    return x;
}

QciAllocation optimize_allocation(const QuantizationGrid &grid, const SystemConfig &config,
                                  const SolverSettings &settings)
{
    config.validate();
    settings.validate();
    const int J = grid.cells;
    const int interior = J - 1;
    QciAllocation out;
    out.c = {std::vector<double>(J, 0.0), std::vector<double>(J, 0.0)};

    const std::array<double, 2> spare{config.c1 - grid.header_bits, config.c2 - grid.header_bits};
    if (spare[0] < 0.0 || spare[1] < 0.0)
    {
        out.diagnostic = "header of " + std::to_string(grid.header_bits) +
                         " bits exceeds a link budget";
        out.rates = cell_rates(grid, out.c, settings);
        return out;
    }

    const std::vector<double> weights(grid.probs.begin(), grid.probs.begin() + interior);
    const double interior_mass = std::accumulate(weights.begin(), weights.end(), 0.0);
    for (int k = 0; k < 2; ++k)
        for (int j = 0; j < interior; ++j)
            out.c[k][j] = spare[k] / interior_mass;

    auto project = [&](const Allocation &raw) {
        Allocation p = raw;
        for (int k = 0; k < 2; ++k)
        {
            std::vector<double> head(raw[k].begin(), raw[k].begin() + interior);
            head = project_weighted_simplex(head, weights, spare[k]);
            std::copy(head.begin(), head.end(), p[k].begin());
            p[k][interior] = 0.0;
        }
        return p;
    };

    double value = qci_objective(grid, out.c, settings);
    double step = 1.0;
    for (out.iterations = 0; out.iterations < settings.max_iter; ++out.iterations)
    {
        const Allocation g = gradient(grid, out.c, settings);
        bool accepted = false;
        Allocation next;
        double next_value = value;
        step *= 4.0;
        for (int halving = 0; halving < kMaxHalvings; ++halving, step *= 0.5)
        {
            Allocation raw = out.c;
            for (int k = 0; k < 2; ++k)
                for (int j = 0; j < interior; ++j)
                    raw[k][j] += step * g[k][j];
            next = project(raw);
            Allocation move = next;
            for (int k = 0; k < 2; ++k)
                for (int j = 0; j < J; ++j)
                    move[k][j] -= out.c[k][j];
            const double predicted = dot(g, move);
            if (predicted <= 0.0)
                break;
            next_value = qci_objective(grid, next, settings);
            if (next_value >= value + kArmijo * predicted)
            {
                accepted = true;
                break;
            }
        }
        if (!accepted)
            break;
        const double gain = next_value - value;
        out.c = next;
        value = next_value;
        if (gain < settings.abs_tol)
            break;
    }

    out.rates = cell_rates(grid, out.c, settings);
    out.lower_bound = value;
    return out;
}

} // namespace dib
