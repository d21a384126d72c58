// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#include "dib/bounds/fixed_rate.hpp"
#include "dib/errors.hpp"
#include "dib/numerics/maxmin.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

using namespace dib;
using Catch::Matchers::WithinAbs;

namespace {

struct Instance
{
    SnrPair snrs;
    std::array<double, 2> budgets;
};

Instance draw(RandomSource &rng)
{
    return {{100.0 * rng.uniform(), 100.0 * rng.uniform()},
            {10.0 * rng.uniform(), 10.0 * rng.uniform()}};
}

} // namespace

TEST_CASE("fixed_rate examples")
{
    const SolverSettings s;
    for (double rho : {0.0, 1.0, 1e6})
    {
        const FixedRateResult r = fixed_rate({rho, rho}, {0.0, 0.0}, s);
        CHECK(r.rate == 0.0);
        CHECK(r.r_opt[0] == 0.0);
        CHECK(r.r_opt[1] == 0.0);
    }
    CHECK_THAT(fixed_rate({1.0, 0.0}, {1.0, 0.0}, s).rate,
               WithinAbs(std::log2(2.0 / 1.5), 1e-9));
    CHECK_THAT(fixed_rate({1.0, 0.0}, {1.0, 0.0}, s).rate, WithinAbs(0.415, 1e-3));

    for (double rho : {0.5, 10.0, 1000.0})
        for (double c : {0.5, 3.0, 12.0})
        {
            const FixedRateResult r = fixed_rate({rho, rho}, {c, c}, s);
            CAPTURE(rho, c);
            CHECK_THAT(r.r_opt[0], WithinAbs(r.r_opt[1], 1e-4));
        }
}

TEST_CASE("input validation")
{
    const SolverSettings s;
    CHECK_THROWS_AS(fixed_rate({-1.0, 1.0}, {1.0, 1.0}, s), InvalidArgument);
    CHECK_THROWS_AS(fixed_rate({1.0, 1.0}, {1.0, -1.0}, s), InvalidArgument);
    CHECK_THROWS_AS(fixed_rate({INFINITY, 1.0}, {1.0, 1.0}, s), InvalidArgument);
}

TEST_CASE("one-relay closed form")
{
    CHECK(one_relay_rate(0.0, 5.0) == 0.0);
    CHECK(one_relay_rate(5.0, 0.0) == 0.0);
    RandomSource rng(3);
    const SolverSettings s;
    for (int i = 0; i < 50; ++i)
    {
        const double rho = 0.1 + 999.9 * rng.uniform();
        const double c = 0.1 + 14.9 * rng.uniform();
        const double expected = std::log2((1.0 + rho) / (1.0 + rho * std::exp2(-c)));
        CHECK_THAT(one_relay_rate(rho, c), WithinAbs(expected, 1e-12));
        CHECK_THAT(fixed_rate({rho, 0.0}, {c, 0.0}, s).rate, WithinAbs(expected, 1e-5));
    }
}

TEST_CASE("relay-exchange symmetry")
{
    const SolverSettings s;
    RandomSource rng(4);
    for (int i = 0; i < 100; ++i)
    {
        const Instance x = draw(rng);
        const double a = fixed_rate(x.snrs, x.budgets, s).rate;
        const double b =
            fixed_rate({x.snrs.rho2, x.snrs.rho1}, {x.budgets[1], x.budgets[0]}, s).rate;
        CHECK_THAT(a, WithinAbs(b, 1e-8));
    }
}

TEST_CASE("caps and bounds")
{
    const SolverSettings s;
    RandomSource rng(5);
    for (int i = 0; i < 200; ++i)
    {
        const Instance x = draw(rng);
        const FixedRateResult r = fixed_rate(x.snrs, x.budgets, s);
        CHECK(r.rate >= 0.0);
        CHECK(r.rate <= x.budgets[0] + x.budgets[1] + 1e-8);
        CHECK(r.rate <= std::log2(1.0 + x.snrs.rho1 + x.snrs.rho2) + 1e-8);
        CHECK(r.r_opt[0] >= 0.0);
        CHECK(r.r_opt[0] <= x.budgets[0]);
        CHECK(r.r_opt[1] >= 0.0);
        CHECK(r.r_opt[1] <= x.budgets[1]);
    }
}

TEST_CASE("monotone in each argument")
{
    const SolverSettings s;
    RandomSource rng(6);
    for (int i = 0; i < 200; ++i)
    {
        const Instance x = draw(rng);
        Instance y = x;
        switch (i % 4)
        {
        case 0: y.snrs.rho1 += 10.0 * rng.uniform(); break;
        case 1: y.snrs.rho2 += 10.0 * rng.uniform(); break;
        case 2: y.budgets[0] += rng.uniform(); break;
        default: y.budgets[1] += rng.uniform(); break;
        }
        CHECK(fixed_rate(y.snrs, y.budgets, s).rate >=
              fixed_rate(x.snrs, x.budgets, s).rate - 1e-6);
    }
}

TEST_CASE("agrees with the exhaustive lattice")
{
    SolverSettings s;
    s.grid_points = 3000;
    RandomSource rng(7);
    for (int i = 0; i < 20; ++i)
    {
        const Instance x = draw(rng);
        const double rate = fixed_rate(x.snrs, x.budgets, s).rate;
        const double lattice =
            maxmin_grid_oracle({{x.snrs.rho1, x.snrs.rho2}, {x.budgets[0], x.budgets[1]}}, s);
        CHECK_THAT(rate, WithinAbs(lattice, 1e-3));
        CHECK(rate >= lattice - 1e-6);
    }
}

TEST_CASE("active subsets are the tight terms")
{
    const SolverSettings s;
    RandomSource rng(8);
    for (int i = 0; i < 100; ++i)
    {
        const Instance x = draw(rng);
        const FixedRateResult r = fixed_rate(x.snrs, x.budgets, s);
        const double r1 = r.r_opt[0], r2 = r.r_opt[1];
        const double a1 = x.snrs.rho1 * (1.0 - std::exp2(-r1));
        const double a2 = x.snrs.rho2 * (1.0 - std::exp2(-r2));
        const double spare1 = x.budgets[0] - r1, spare2 = x.budgets[1] - r2;
        const std::pair<const char *, double> terms[] = {
            {"{}", std::log2(1.0 + a1 + a2)},
            {"{1}", std::log2(1.0 + a2) + spare1},
            {"{2}", std::log2(1.0 + a1) + spare2},
            {"{1,2}", spare1 + spare2},
        };
        REQUIRE_FALSE(r.active_subsets.empty());
        double smallest = INFINITY;
        for (const auto &[label, value] : terms)
        {
            smallest = std::min(smallest, value);
            const bool listed = std::find(r.active_subsets.begin(), r.active_subsets.end(),
                                          label) != r.active_subsets.end();
            CAPTURE(label, value, r.rate);
            CHECK(listed == (std::abs(value - r.rate) <= 1e-6));
        }
        CHECK_THAT(smallest, WithinAbs(r.rate, 1e-9));
    }
}
