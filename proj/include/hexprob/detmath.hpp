// Copyright hexprob contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cmath>
#include <cstdint>

namespace hexprob::detmath {

// Deterministic log and sin/cos replacements for the sampling pipeline.
// libm implementations vary across platforms and have no vector twins with
// identical rounding, so the Box-Muller path uses these instead: plain
// Horner polynomials over fma/sqrt/div, which the AVX2 kernel replays
// operation for operation. Accuracy is a few ulp, far beyond what the
// estimator needs; the point is bit-identical streams everywhere.

inline constexpr double kLn2Hi = 6.93147180369123816490e-01;  // top bits of ln 2
inline constexpr double kLn2Lo = 1.90821492927058770002e-10;  // ln 2 - kLn2Hi
inline constexpr double kSqrtHalf = 0.70710678118654752440;
inline constexpr double kHalfPi = 1.57079632679489661923;

// atanh series: log(m) = 2s * sum c_k (s^2)^k with s = (m-1)/(m+1).
inline constexpr double kLogCoeffs[12] = {
    1.0,        1.0 / 3.0,  1.0 / 5.0,  1.0 / 7.0,  1.0 / 9.0,  1.0 / 11.0,
    1.0 / 13.0, 1.0 / 15.0, 1.0 / 17.0, 1.0 / 19.0, 1.0 / 21.0, 1.0 / 23.0,
};

// sin(x)/x and cos(x) Taylor coefficients in w = x^2, |x| <= pi/4.
inline constexpr double kSinCoeffs[9] = {
    1.0,
    -1.0 / 6.0,
    1.0 / 120.0,
    -1.0 / 5040.0,
    1.0 / 362880.0,
    -1.0 / 39916800.0,
    1.0 / 6227020800.0,
    -1.0 / 1307674368000.0,
    1.0 / 355687428096000.0,
};
inline constexpr double kCosCoeffs[10] = {
    1.0,
    -1.0 / 2.0,
    1.0 / 24.0,
    -1.0 / 720.0,
    1.0 / 40320.0,
    -1.0 / 3628800.0,
    1.0 / 479001600.0,
    -1.0 / 87178291200.0,
    1.0 / 20922789888000.0,
    -1.0 / 6402373705728000.0,
};

/// Natural log of a positive normal double.
inline double log_deterministic(double x) {
    auto bits = std::bit_cast<std::uint64_t>(x);
    int e = static_cast<int>((bits >> 52) & 0x7FF) - 1022;
    double m = std::bit_cast<double>((bits & 0x000FFFFFFFFFFFFFull) | 0x3FE0000000000000ull);
    if (m < kSqrtHalf) {  // keep m in [sqrt(1/2), sqrt(2)) so |s| stays small
        m = m + m;
        e -= 1;
    }
    double s = (m - 1.0) / (m + 1.0);
    double z = s * s;
    double poly = kLogCoeffs[11];
    for (int i = 10; i >= 0; --i) {
        poly = std::fma(poly, z, kLogCoeffs[i]);
    }
    double two_s = s + s;
    double log_m = two_s * poly;
    double ed = static_cast<double>(e);
    return std::fma(ed, kLn2Hi, std::fma(ed, kLn2Lo, log_m));
}

/// sin(2*pi*u) and cos(2*pi*u) for u in [0, 1).
inline void sincos_two_pi(double u, double& sin_out, double& cos_out) {
    double t = 4.0 * u;                 // angle in quarter turns, exact
    double k = std::floor(t + 0.5);     // nearest quadrant, 0..4
    double x = (t - k) * kHalfPi;       // residual in [-pi/4, pi/4]
    double w = x * x;
    double sp = kSinCoeffs[8];
    for (int i = 7; i >= 0; --i) {
        sp = std::fma(sp, w, kSinCoeffs[i]);
    }
    double cp = kCosCoeffs[9];
    for (int i = 8; i >= 0; --i) {
        cp = std::fma(cp, w, kCosCoeffs[i]);
    }
    double sx = x * sp;
    double cx = cp;
    switch (static_cast<int>(k) & 3) {
        case 0: sin_out = sx; cos_out = cx; break;
        case 1: sin_out = cx; cos_out = -sx; break;
        case 2: sin_out = -sx; cos_out = -cx; break;
        default: sin_out = -cx; cos_out = sx; break;
    }
}

}  // namespace hexprob::detmath
