// Copyright hexprob contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "hexprob/geometry.hpp"

namespace hexprob {

struct VerifyCounts {
    std::uint64_t trials = 0;
    std::uint64_t oracle_mismatches = 0;
    std::uint64_t symmetry_violations = 0;
    std::uint64_t invariant_failures = 0;

    bool all_clear() const {
        return oracle_mismatches == 0 && symmetry_violations == 0 && invariant_failures == 0;
    }
};

/// Self-verification sweep over `trials` seeded random unit normals:
/// section_polygon vs oracle_edge_clip agreement, classify invariance under
/// the 48 signed permutations and under scaling, and the polygon invariants
/// (on plane, on surface, centrally symmetric, oriented, area in
/// [4, 4*sqrt(2)]). Returns violation counts; all zero on a healthy build.
VerifyCounts run_verification(std::uint64_t trials, std::uint64_t seed,
                              const Tolerance& tol = {});

}  // namespace hexprob
