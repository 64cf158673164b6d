// Copyright hexprob contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace hexprob {

/// Base class for all hexprob errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The zero vector defines no plane.
struct ZeroNormal : Error {
    using Error::Error;
};

/// Input outside an operation's domain (wrong sign, wrong section class, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Polygon with fewer than three distinct vertices.
struct DegeneratePolygon : Error {
    using Error::Error;
};

/// Vector expected to be unit length is not.
struct NotUnit : Error {
    using Error::Error;
};

/// Spherical triangle with coincident, antipodal, or collapsed vertices.
struct DegenerateTriangle : Error {
    using Error::Error;
};

/// Invalid Monte Carlo run configuration.
struct InvalidConfig : Error {
    using Error::Error;
};

/// A sample and its negation classified differently (signals a classifier bug).
struct SymmetryViolation : Error {
    using Error::Error;
};

}  // namespace hexprob
