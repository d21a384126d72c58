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

// Quantized channel inversion. Each relay inverts its channel, degrades the
// inverse gain xi = |S|^-2 up to the next level of a J-point grid, and sends
// the level index as a header ahead of the compressed observation.
//
// Indices are zero-based: cells 0 .. J-2 have finite levels, cell J-1 is the
// infinite level whose SNR is exactly zero. Both relays share one grid since
// they see the same noise power and fading law.

struct QuantizationGrid
{
    int cells = 0;                   // J
    std::vector<double> levels;      // b_j, increasing; levels[J-1] = +inf
    std::vector<double> probs;       // P(level j), uniform 1/J
    std::vector<double> snr_levels;  // 1 / (b_j sigma^2); snr_levels[J-1] = 0
    double header_bits = 0.0;        // entropy of the level index
    bool header_exceeds_budget = false;   // log2 J > min(C1, C2)
};

QuantizationGrid build_grid(int cells, const SystemConfig &config);

// Allocation c[k][j]: bits spent by relay k in cell j. c[k][J-1] is always 0.
using Allocation = std::array<std::vector<double>, 2>;

// Matrix of rates R[j1][j2], row-major J x J.
struct CellRates
{
    int cells = 0;
    std::vector<double> values;

    double at(int j1, int j2) const { return values[static_cast<std::size_t>(j1 * cells + j2)]; }
};

double cell_rate(int j1, int j2, const QuantizationGrid &grid, const Allocation &c,
                 const SolverSettings &settings);

// All J^2 cells. The OpenMP and serial versions perform identical arithmetic
// per cell and return bit-identical results.
CellRates cell_rates(const QuantizationGrid &grid, const Allocation &c,
                     const SolverSettings &settings);
CellRates cell_rates_serial(const QuantizationGrid &grid, const Allocation &c,
                            const SolverSettings &settings);

// Probability-weighted sum of the cell rates.
double qci_objective(const QuantizationGrid &grid, const Allocation &c,
                     const SolverSettings &settings);

struct QciAllocation
{
    Allocation c;
    CellRates rates;
    double lower_bound = 0.0;
    int iterations = 0;
    std::string diagnostic;          // set when the header does not fit
};

// Maximises qci_objective subject to sum_j P_j c[k][j] <= C_k - H per relay
// and c >= 0, by projected gradient ascent with finite-difference gradients.
QciAllocation optimize_allocation(const QuantizationGrid &grid, const SystemConfig &config,
                                  const SolverSettings &settings);

// Euclidean projection of v onto {x >= 0, sum_j w_j x_j <= budget}, w_j > 0.
std::vector<double> project_weighted_simplex(const std::vector<double> &v,
                                             const std::vector<double> &w, double budget);

} // namespace dib
