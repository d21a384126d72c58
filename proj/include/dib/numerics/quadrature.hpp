// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#pragma once

#include "dib/numerics/settings.hpp"

#include <functional>
#include <vector>

namespace dib {

/// Gauss-Laguerre rule with the exponential weight folded into the weights:
/// sum_i weights[i] * f(nodes[i]) approximates the plain integral of f over
/// [0, inf).
struct LaguerreRule
{
    std::vector<double> nodes;
    std::vector<double> weights;   // w_i * exp(x_i)
};

/// Rule of the given order. Rules are built once per order and cached; the
/// returned reference stays valid for the lifetime of the process.
const LaguerreRule &laguerre_rule(int order);

/// Integral of f over [lower, inf) by shifted Gauss-Laguerre quadrature.
///
/// Starts at settings.quad_order and doubles the order until two successive
/// estimates agree within abs_tol * max(1, |value|). At most four doublings are
/// attempted before NonConvergent is thrown. DomainError is thrown if f returns
/// a non-finite value at a node, or if lower is negative or non-finite.
///
/// f must decay at least like exp(-x) for the result to be meaningful.
double integrate_semiinfinite(const std::function<double(double)> &f, double lower,
                              const SolverSettings &settings);

} // namespace dib
