// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#include "dib/numerics/random.hpp"

#include <cmath>

namespace dib {

std::uint64_t mix_seed(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RandomSource::RandomSource(std::uint64_t seed) : engine_(mix_seed(seed)) {}

RandomSource RandomSource::substream(std::uint64_t seed, std::uint64_t index)
{
    return RandomSource(mix_seed(seed) ^ mix_seed(~index));
}

double RandomSource::uniform() { return uniform_(engine_); }

double RandomSource::normal(double stddev) { return stddev * normal_(engine_); }

double RandomSource::exponential() { return -std::log1p(-uniform()); }

} // namespace dib
