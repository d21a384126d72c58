// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#pragma once

#include "dib/numerics/settings.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace dib {

struct VerifyCheck
{
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions
{
    // Test hook: the second run of the determinism check uses a perturbed
    // seed, so that check must fail.
    bool corrupt_seed_stream = false;
};

// Runs the built-in oracle suites: solver vs lattice, quantile and TCI Monte
// Carlo, E1 vs quadrature, one-relay reduction, constraint residuals and
// seed determinism.
std::vector<VerifyCheck> run_verification(const SolverSettings &settings,
                                          const VerifyOptions &options = {});

// Prints one line per check; returns 0 iff all passed.
int print_verification(const std::vector<VerifyCheck> &checks, std::ostream &out);

} // namespace dib
