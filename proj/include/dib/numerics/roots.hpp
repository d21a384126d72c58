// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#pragma once

#include "dib/numerics/settings.hpp"

#include <functional>

namespace dib {

/// Root of a continuous monotone g on [lo, hi] by bisection.
///
/// Returns x with |g(x)| <= abs_tol or a final bracket no wider than abs_tol.
/// Throws BracketError if g(lo) and g(hi) share a strict sign, NonConvergent if
/// max_iter halvings are not enough.
double bisect(const std::function<double(double)> &g, double lo, double hi,
              const SolverSettings &settings);

} // namespace dib
