// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#include "dib/bounds/upper_bound.hpp"
#include "dib/errors.hpp"
#include "dib/numerics/quadrature.hpp"
#include "dib/numerics/random.hpp"

#include <catch_amalgamated.hpp>

#include <boost/math/quadrature/exp_sinh.hpp>

#include <cmath>
#include <numbers>

using namespace dib;
using Catch::Matchers::WithinAbs;

namespace {

// Raw integrals over [nu sigma^2, inf), integrated by Boost rather than the
// library's Laguerre kernel.
double spent_by_quadrature(double nu, double s2)
{
    const double a = nu * s2;
    boost::math::quadrature::exp_sinh<double> q;
    return q.integrate([&](double u) {
        const double l = a + u;
        return std::log2(l / a) * l * std::exp(-l);
    });
}

double rate_by_quadrature(double nu, double s2)
{
    const double a = nu * s2;
    boost::math::quadrature::exp_sinh<double> q;
    return q.integrate([&](double u) {
        const double l = a + u;
        return (std::log2(1.0 + l / s2) - std::log2(1.0 + nu)) * l * std::exp(-l);
    });
}

} // namespace

TEST_CASE("zero budget")
{
    const UpperBoundResult r = upper_bound({1.0, 0.0, 0.0}, SolverSettings{});
    CHECK(r.rate == 0.0);
    CHECK(std::isinf(r.nu));
}

TEST_CASE("invalid config")
{
    CHECK_THROWS_AS(upper_bound({0.0, 1.0, 1.0}, SolverSettings{}), InvalidArgument);
    CHECK_THROWS_AS(upper_bound({1.0, -1.0, 1.0}, SolverSettings{}), InvalidArgument);
}

TEST_CASE("closed forms match direct integration")
{
    for (double s2 : {1e-6, 1e-3, 0.1, 1.0, 10.0})
        for (double nu : {1e-8, 1e-3, 0.5, 2.0, 40.0})
        {
            CAPTURE(s2, nu);
            CHECK_THAT(spent_budget(nu, s2), WithinAbs(spent_by_quadrature(nu, s2), 1e-9));
            CHECK_THAT(bound_at_level(nu, s2), WithinAbs(rate_by_quadrature(nu, s2), 1e-9));
        }
}

TEST_CASE("large budget approaches the ergodic limit")
{
    const UpperBoundResult r = upper_bound({1.0, 30.0, 30.0}, SolverSettings{});
    boost::math::quadrature::exp_sinh<double> q;
    const double limit =
        q.integrate([](double l) { return std::log2(1.0 + l) * l * std::exp(-l); });
    CHECK(r.rate <= limit + 1e-9);
    CHECK_THAT(r.rate, WithinAbs(limit, 0.01));
}

TEST_CASE("40 dB stays below the infinite-budget limit")
{
    const double s2 = 1e-4;
    const UpperBoundResult r = upper_bound({s2, 10.0, 10.0}, SolverSettings{});
    boost::math::quadrature::exp_sinh<double> q;
    const double limit =
        q.integrate([&](double l) { return std::log2(1.0 + l / s2) * l * std::exp(-l); });
    CHECK(r.rate < 20.0);
    CHECK(r.rate < limit);
    CHECK(r.rate > 13.0);
}

TEST_CASE("water level reproduces the budget")
{
    const SolverSettings s;
    RandomSource rng(21);
    for (int i = 0; i < 20; ++i)
    {
        const double s2 = std::pow(10.0, -6.0 * rng.uniform());
        const double c1 = 20.0 * rng.uniform(), c2 = 20.0 * rng.uniform();
        const UpperBoundResult r = upper_bound({s2, c1, c2}, s);
        CAPTURE(s2, c1, c2, r.nu);
        CHECK_THAT(spent_by_quadrature(r.nu, s2), WithinAbs(c1 + c2, 1e-6));
        CHECK(std::abs(r.constraint_residual) <= 1e-6);
        CHECK(r.rate <= c1 + c2 + 1e-8);
        CHECK(r.rate >= 0.0);
    }
}

TEST_CASE("monotone ladders")
{
    const SolverSettings s;
    for (double s2 : {1e-6, 1e-2, 1.0})
    {
        double prev = 0.0;
        for (double c = 0.25; c <= 30.0; c += 0.25)
        {
            const double v = upper_bound({s2, c, c}, s).rate;
            CHECK(v >= prev - 1e-6);
            prev = v;
        }
    }
    for (double c : {1.0, 10.0})
    {
        double prev = INFINITY;
        for (double db = 60.0; db >= -10.0; db -= 1.0)
        {
            const double v = upper_bound({std::pow(10.0, -db / 10.0), c, c}, s).rate;
            CHECK(v <= prev + 1e-6);
            prev = v;
        }
    }
}
