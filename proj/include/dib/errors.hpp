// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace dib {

// Every failure raised by the library derives from dib::Error so callers such
// as the sweep driver can record a failed cell and carry on.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of the operation (t <= 0 for E1,
// non-finite integrand, ...).
class DomainError : public Error
{
public:
    using Error::Error;
};

// Malformed input that violates a documented precondition or type invariant.
class InvalidArgument : public Error
{
public:
    using Error::Error;
};

class NonConvergent : public Error
{
public:
    using Error::Error;
};

// Root finder called with endpoint values of equal sign.
class BracketError : public Error
{
public:
    using Error::Error;
};

// Header bits alone exceed a relay's link budget.
class InfeasibleBudget : public Error
{
public:
    using Error::Error;
};

// A link budget of exactly zero, for which the MMSE test channel has infinite
// distortion.
class DegenerateBudget : public Error
{
public:
    using Error::Error;
};

class IoError : public Error
{
public:
    using Error::Error;
};

} // namespace dib
