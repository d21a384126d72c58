// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#include "dib/numerics/roots.hpp"
#include "dib/errors.hpp"

#include <cmath>
#include <string>

namespace dib {

double bisect(const std::function<double(double)> &g, double lo, double hi,
              const SolverSettings &settings)
{
    if (!(lo <= hi))
        throw InvalidArgument("bisect: lo must not exceed hi");

    double g_lo = g(lo);
    const double g_hi = g(hi);
    if (!std::isfinite(g_lo) || !std::isfinite(g_hi))
        throw DomainError("bisect: non-finite function value at a bracket end");
    if (g_lo == 0.0)
        return lo;
    if (g_hi == 0.0)
        return hi;
    if ((g_lo > 0.0) == (g_hi > 0.0))
        throw BracketError("bisect: g(lo) and g(hi) have the same sign");

    for (int it = 0; it < settings.max_iter; ++it)
    {
        const double mid = 0.5 * (lo + hi);
        const double g_mid = g(mid);
        if (std::abs(g_mid) <= settings.abs_tol || hi - lo <= settings.abs_tol)
            return mid;
        if ((g_mid > 0.0) == (g_lo > 0.0))
        {
            lo = mid;
            g_lo = g_mid;
        }
        else
            hi = mid;
    }
    throw NonConvergent("bisect: no convergence after " + std::to_string(settings.max_iter) +
                        " iterations");
}

} // namespace dib
