// Copyright hexprob contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace hexprob {

/// Exact hexagon probability assembled from the spherical-region route.
struct ExactResult {
    double triangle_area = 0.0;  // Girard area of one region triangle, sr
    int octant_count = 8;
    double sphere_area = 0.0;  // 4*pi
    double probability = 0.0;  // octant_count * triangle_area / sphere_area
};

/// (6/pi) * arccos(1/3) - 2, the closed form for the probability that a
/// uniformly random central plane cuts the cube in a hexagon.
double closed_form_probability();

/// Same probability via the region construction: 8 copies of the canonical
/// spherical triangle over the sphere area 4*pi. Agrees with the closed form
/// to within 1e-14.
ExactResult probability_from_region();

}  // namespace hexprob
