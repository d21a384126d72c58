// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#include "dib/numerics/settings.hpp"
#include "dib/errors.hpp"

#include <cmath>

namespace dib {

void SolverSettings::validate() const
{
    if (!(abs_tol > 0.0) || !std::isfinite(abs_tol))
        throw InvalidArgument("SolverSettings: abs_tol must be positive and finite");
    if (max_iter < 1)
        throw InvalidArgument("SolverSettings: max_iter must be at least 1");
    if (quad_order < 8)
        throw InvalidArgument("SolverSettings: quad_order must be at least 8");
    if (grid_points < 10)
        throw InvalidArgument("SolverSettings: grid_points must be at least 10");
    if (mc_samples < 1000)
        throw InvalidArgument("SolverSettings: mc_samples must be at least 1000");
}

} // namespace dib
