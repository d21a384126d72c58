// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <random>

namespace dib {

// Seeded pseudo-random source. Not shareable between threads; parallel code
// derives one substream per batch with substream().
class RandomSource
{
public:
    explicit RandomSource(std::uint64_t seed);

    // Independent stream for batch `index` of a computation seeded with `seed`.
    static RandomSource substream(std::uint64_t seed, std::uint64_t index);

    double uniform();              // [0, 1)
    double normal(double stddev);  // zero-mean Gaussian
    double exponential();          // unit mean

private:
    std::mt19937_64 engine_;
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
    std::normal_distribution<double> normal_{0.0, 1.0};
};

// SplitMix64 finaliser, used to decorrelate derived seeds.
std::uint64_t mix_seed(std::uint64_t x);

} // namespace dib
