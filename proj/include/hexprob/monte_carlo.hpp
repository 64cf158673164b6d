// Copyright hexprob contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

#include "hexprob/detmath.hpp"
#include "hexprob/geometry.hpp"
#include "hexprob/rng.hpp"
#include "hexprob/vec3.hpp"

namespace hexprob {

/// Monte Carlo estimate of the hexagon probability. A pure function of
/// (seed, samples): identical configs give bit-identical results, on any
/// thread count and for any chunking.
struct Estimate {
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;  // hexagon classifications
    double p_hat = 0.0;
    double std_err = 0.0;  // sqrt(p_hat (1 - p_hat) / samples)
    std::uint64_t seed = 0;
    std::uint64_t chunks = 1;
};

struct RunConfig {
    std::uint64_t samples = 100000;
    std::uint64_t seed = 42;
    std::uint64_t chunks = 1;  // execution partition; does not affect results
    Tolerance tolerance;
};

namespace detail {

inline constexpr double kRedrawThreshold = 1e-6;

struct GaussianTriple {
    double z1, z2, z3;
};

/// One Box-Muller round: four uniforms -> three standard normals (the
/// fourth normal of the second pair is discarded). This is the reference
/// definition of the sampling pipeline; the SIMD kernel mirrors it exactly.
inline GaussianTriple gaussian_triple(SplitMix64& rng) {
    double u1 = u64_to_unit_open(rng.next());
    double u2 = u64_to_unit_half(rng.next());
    double u3 = u64_to_unit_open(rng.next());
    double u4 = u64_to_unit_half(rng.next());
    double r1 = std::sqrt(-2.0 * detmath::log_deterministic(u1));
    double s1, c1;
    detmath::sincos_two_pi(u2, s1, c1);
    double r2 = std::sqrt(-2.0 * detmath::log_deterministic(u3));
    double s2, c2;
    detmath::sincos_two_pi(u4, s2, c2);
    (void)s2;
    return {r1 * c1, r1 * s1, r2 * c2};
}

inline Vec3 draw_unit_vector(SplitMix64& rng, double redraw_threshold) {
    for (;;) {
        GaussianTriple g = gaussian_triple(rng);
        double nsq = g.z1 * g.z1 + g.z2 * g.z2 + g.z3 * g.z3;
        double len = std::sqrt(nsq);
        if (len < redraw_threshold) {
            continue;
        }
        return {g.z1 / len, g.z2 / len, g.z3 / len};
    }
}

}  // namespace detail

/// Uniform draw on the unit sphere: three standard normal deviates,
/// normalized; redrawn in the (measure-zero) event the norm is below 1e-6.
Vec3 sample_unit_vector(SplitMix64& rng);

/// The unit normal that estimate() classifies as sample `index` of run
/// `seed`, independent of chunking.
Vec3 sample_at(std::uint64_t seed, std::uint64_t index);

/// Samples cfg.samples unit normals, classifies each central plane, and
/// counts hexagons. Boundary classifications count as misses. Chunks run
/// concurrently over disjoint index ranges and reduce in index order.
Estimate estimate(const RunConfig& cfg);

/// Same estimate, but classifies both n and -n for every draw and checks
/// agreement, as a runtime self-check of sign invariance.
/// Throws SymmetryViolation if any pair disagrees.
Estimate estimate_with_negation_antithetic(const RunConfig& cfg);

}  // namespace hexprob
