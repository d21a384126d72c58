// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#include "dib/errors.hpp"
#include "dib/model/channel.hpp"
#include "dib/numerics/quadrature.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace dib;
using Catch::Matchers::WithinAbs;

TEST_CASE("config validation")
{
    CHECK_NOTHROW(SystemConfig{1.0, 0.0, 0.0}.validate());
    CHECK_THROWS_AS((SystemConfig{0.0, 1.0, 1.0}.validate()), InvalidArgument);
    CHECK_THROWS_AS((SystemConfig{-1.0, 1.0, 1.0}.validate()), InvalidArgument);
    CHECK_THROWS_AS((SystemConfig{1.0, -1.0, 1.0}.validate()), InvalidArgument);
    CHECK_THROWS_AS((SystemConfig{1.0, 1.0, NAN}.validate()), InvalidArgument);
    CHECK_THROWS_AS((SystemConfig{INFINITY, 1.0, 1.0}.validate()), InvalidArgument);
}

TEST_CASE("sampled fading matches the Rayleigh law")
{
    const SystemConfig config{1.0, 1.0, 1.0};
    RandomSource source(2024);
    const int n = 1'000'000;
    double sum_g[2] = {0, 0}, sum_g2[2] = {0, 0}, sum_re[2] = {0, 0};
    int above[2] = {0, 0};
    for (int i = 0; i < n; ++i)
    {
        const ChannelState st = sample_state(source, config);
        const double g[2] = {st.gain1(), st.gain2()};
        const double re[2] = {st.s1.real(), st.s2.real()};
        for (int k = 0; k < 2; ++k)
        {
            sum_g[k] += g[k];
            sum_g2[k] += g[k] * g[k];
            sum_re[k] += re[k];
            above[k] += g[k] >= 1.0;
        }
    }
    for (int k = 0; k < 2; ++k)
    {
        const double mean = sum_g[k] / n;
        CHECK(mean >= 0.995);
        CHECK(mean <= 1.005);
        CHECK_THAT(sum_g2[k] / n - mean * mean, WithinAbs(1.0, 0.02));
        CHECK_THAT(sum_re[k] / n, WithinAbs(0.0, 0.005));
        CHECK_THAT(static_cast<double>(above[k]) / n, WithinAbs(std::exp(-1.0), 0.002));
    }
}

TEST_CASE("sampling is deterministic per seed")
{
    const SystemConfig config{1.0, 1.0, 1.0};
    RandomSource a(9), b(9);
    for (int i = 0; i < 100; ++i)
    {
        const ChannelState x = sample_state(a, config);
        const ChannelState y = sample_state(b, config);
        CHECK(x.s1 == y.s1);
        CHECK(x.s2 == y.s2);
    }
}

TEST_CASE("snr pair")
{
    const SystemConfig config{0.5, 1.0, 1.0};
    const ChannelState st{{1.0, 1.0}, {0.0, 3.0}};
    const SnrPair p = snr_pair(st, config);
    CHECK_THAT(p.rho1, WithinAbs(4.0, 1e-15));
    CHECK_THAT(p.rho2, WithinAbs(18.0, 1e-15));
}

TEST_CASE("eigenvalue density")
{
    CHECK(eigen_density(0.0) == 0.0);
    CHECK_THAT(eigen_density(1.0), WithinAbs(0.367879, 1e-6));
    CHECK_THROWS_AS(eigen_density(-0.1), DomainError);

    const SolverSettings s;
    CHECK_THAT(integrate_semiinfinite([](double x) { return eigen_density(x); }, 0.0, s),
               WithinAbs(1.0, 1e-9));

    double prev = -1.0;
    for (int i = 0; i <= 100; ++i)
    {
        const double v = eigen_density(i * 0.01);
        CHECK(v >= 0.0);
        CHECK(v > prev);
        prev = v;
    }
    for (int i = 1; i <= 100; ++i)
    {
        const double v = eigen_density(1.0 + i * 0.1);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("quantiles of the inverse gain")
{
    CHECK_THAT(xi_quantile(0.25), WithinAbs(0.721348, 1e-6));
    CHECK_THAT(xi_quantile(0.5), WithinAbs(1.442695, 1e-6));
    CHECK_THAT(xi_quantile(0.75), WithinAbs(3.476059, 1e-6));
    CHECK_THROWS_AS(xi_quantile(0.0), DomainError);
    CHECK_THROWS_AS(xi_quantile(1.0), DomainError);
    CHECK_THROWS_AS(xi_quantile(NAN), DomainError);

    SECTION("empirical CDF agrees within three standard errors")
    {
        const SystemConfig config{1.0, 1.0, 1.0};
        RandomSource source(77);
        const int n = 1'000'000;
        for (int J : {2, 4, 8})
        {
            std::vector<int> below(J, 0);
            RandomSource local = source;
            for (int i = 0; i < n; ++i)
            {
                const double xi = 1.0 / sample_state(local, config).gain1();
                for (int j = 1; j < J; ++j)
                    below[j] += xi <= xi_quantile(static_cast<double>(j) / J);
            }
            for (int j = 1; j < J; ++j)
            {
                const double p = static_cast<double>(j) / J;
                CAPTURE(J, j);
                CHECK_THAT(static_cast<double>(below[j]) / n,
                           WithinAbs(p, 3.0 * std::sqrt(p * (1 - p) / n)));
            }
        }
    }
}

TEST_CASE("dB conversion")
{
    CHECK(db_to_linear(0.0) == 1.0);
    CHECK_THAT(db_to_linear(40.0), WithinAbs(1e4, 1e-9));
    CHECK_THAT(db_to_linear(-10.0), WithinAbs(0.1, 1e-15));
}
