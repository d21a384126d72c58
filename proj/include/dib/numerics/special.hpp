// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#pragma once

namespace dib {

/// Exponential integral E1(t) = int_t^inf exp(-x)/x dx for t > 0.
/// Power series for t <= 1, continued fraction above. Relative error is below
/// 1e-12 over the whole positive axis. Throws DomainError for t <= 0 or NaN.
double exp_integral_e1(double t);

/// exp(t) * E1(t), evaluated without forming the two factors separately so it
/// stays finite where E1 underflows. Same domain as exp_integral_e1.
double scaled_exp_integral_e1(double t);

} // namespace dib
