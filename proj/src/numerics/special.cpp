// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#include "dib/numerics/special.hpp"
#include "dib/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace dib {

namespace {

void check_domain(double t)
{
    if (!(t > 0.0))
        throw DomainError("exponential integral: argument must be positive");
}

// -gamma - ln t - sum_{k>=1} (-t)^k / (k k!), accurate for 0 < t <= 1.
double e1_series(double t)
{
    double term = 1.0;
    double sum = 0.0;
    for (int k = 1; k < 100; ++k)
    {
        term *= -t / k;
        const double add = term / k;
        sum += add;
        if (std::abs(add) < 1e-17 * std::abs(sum))
            break;
    }
    return -std::numbers::egamma - std::log(t) - sum;
}

// exp(t) E1(t) from the continued fraction 1/(t+1-1/(t+3-4/(t+5-...))),
// modified Lentz evaluation. Converges quickly for t > 1.
double scaled_e1_fraction(double t)
{
    constexpr double tiny = 1e-300;
    constexpr double eps = 1e-16;
    double b = t + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 1000; ++i)
    {
        const double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < eps)
            break;
    }
    return h;
}

} // namespace

double exp_integral_e1(double t)
{
    check_domain(t);
    if (t <= 1.0)
        return e1_series(t);
    return std::exp(-t) * scaled_e1_fraction(t);
}

double scaled_exp_integral_e1(double t)
{
    check_domain(t);
    if (t <= 1.0)
        return std::exp(t) * e1_series(t);
    return scaled_e1_fraction(t);
}

} // namespace dib
