// Copyright hexprob contributors
// SPDX-License-Identifier: Apache-2.0
#include "hexprob/probability.hpp"

#include <cmath>
#include <numbers>

#include "hexprob/spherical.hpp"

namespace hexprob {

double closed_form_probability() {
    return (6.0 / std::numbers::pi) * std::acos(1.0 / 3.0) - 2.0;
}

ExactResult probability_from_region() {
    const SphericalTriangle t = hexagon_region_triangle();
    ExactResult r;
    r.triangle_area = girard_area(t);
    r.octant_count = 8;
    r.sphere_area = 4.0 * std::numbers::pi;
    r.probability = static_cast<double>(r.octant_count) * r.triangle_area / r.sphere_area;
    return r;
}

}  // namespace hexprob
