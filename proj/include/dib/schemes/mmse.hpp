// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#pragma once

#include "dib/model/channel.hpp"
#include "dib/numerics/settings.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace dib {

// MMSE-based scheme. Relay k forwards its MMSE estimate
//   Xbar_k = U_k X + noise,   U_k = g_k / (g_k + sigma^2),   g_k = |S_k|^2,
// through a Gaussian test channel with distortion D_k chosen so that the
// Gaussian description rate log2(1 + E|Xbar_k|^2 / D_k) equals C_k.

// Fading law of g_k. `unit_constant` (g = 1 always) makes Var(U) vanish and
// every expectation elementary; it exists for tests.
enum class FadingLaw
{
    rayleigh,
    unit_constant,
};

struct MmseCalibration
{
    std::array<double, 2> est_power{};    // E|Xbar_k|^2 = E[U_k]
    std::array<double, 2> distortion{};   // D_k
    std::array<double, 2> u_mean{};
    std::array<double, 2> u_var{};
    std::array<double, 2> v_mean{};       // E[V_k], V_k = U_k sigma^2 / (g_k + sigma^2) + D_k
};

// Throws DegenerateBudget if either budget is zero.
MmseCalibration calibrate(const SystemConfig &config, const SolverSettings &settings,
                          FadingLaw law = FadingLaw::rayleigh);

struct MmseResult
{
    double rate = 0.0;
    double mc_halfwidth = 0.0;               // 95% half-width of the joint term
    std::array<double, 2> constraint_check{};   // log2(1 + est_power / D), bits
    MmseCalibration calibration;
    std::string diagnostic;                  // set for a zero budget
};

// rate = E[log2 det(u u^T + diag(V))] - sum_k E_t[log2(Var(U_k) t + E[V_k])]
// with u = (U_1, U_2) and t unit-mean exponential. The first expectation is a
// seeded Monte Carlo over (g_1, g_2); the second is a 1-D quadrature.
MmseResult mmse_rate(const SystemConfig &config, const SolverSettings &settings,
                     FadingLaw law = FadingLaw::rayleigh);

// Monte Carlo mean and 95% half-width of log2 det over settings.mc_samples
// fading draws, in fixed batches with one substream per batch. The serial
// version reproduces the OpenMP result bit for bit.
struct JointTerm
{
    double mean = 0.0;
    double halfwidth = 0.0;
};

JointTerm joint_term(const MmseCalibration &cal, const SystemConfig &config,
                     const SolverSettings &settings, FadingLaw law = FadingLaw::rayleigh);
JointTerm joint_term_serial(const MmseCalibration &cal, const SystemConfig &config,
                            const SolverSettings &settings, FadingLaw law = FadingLaw::rayleigh);

inline constexpr std::int64_t kMmseBatchSize = 65536;

} // namespace dib
