// Copyright hexprob contributors
// SPDX-License-Identifier: Apache-2.0
#include "hexprob/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hexprob {

namespace {

constexpr double kUnitTol = 1e-12;
// Below this the law-of-cosines angle has no significant bits left.
constexpr double kDegenerateSinProduct = 1e-14;

void require_unit(const Vec3& v) {
    if (std::fabs(norm(v) - 1.0) > kUnitTol) {
        throw NotUnit("vertex must have unit norm within 1e-12");
    }
}

void require_valid_arcs(double a, double b, double c) {
    const bool in_range = a > 0.0 && a < std::numbers::pi && b > 0.0 &&
                          b < std::numbers::pi && c > 0.0 && c < std::numbers::pi;
    const bool triangle = a < b + c && b < a + c && c < a + b &&
                          a + b + c < 2.0 * std::numbers::pi;
    if (!in_range || !triangle) {
        throw DegenerateTriangle("arcs do not form a spherical triangle");
    }
}

}  // namespace

double arc_length(const Vec3& u, const Vec3& w) {
    require_unit(u);
    require_unit(w);
    return std::acos(std::clamp(dot(u, w), -1.0, 1.0));
}

double angle_from_arcs(double opposite, double b, double c) {
    const double sb = std::sin(b);
    const double sc = std::sin(c);
    if (sb * sc <= kDegenerateSinProduct) {
        throw DegenerateTriangle("adjacent arcs too close to 0 or pi for a defined angle");
    }
    const double t = (std::cos(opposite) - std::cos(b) * std::cos(c)) / (sb * sc);
    return std::acos(std::clamp(t, -1.0, 1.0));
}

SphericalTriangle triangle_from_vertices(const Vec3& va, const Vec3& vb, const Vec3& vc) {
    SphericalTriangle t;
    t.va = va;
    t.vb = vb;
    t.vc = vc;
    t.arc_a = arc_length(vb, vc);
    t.arc_b = arc_length(vc, va);
    t.arc_c = arc_length(va, vb);
    // Coincident or antipodal vertex pairs produce arcs of 0 or pi and are
    // rejected by the angle computations below.
    t.angle_a = angle_from_arcs(t.arc_a, t.arc_b, t.arc_c);
    t.angle_b = angle_from_arcs(t.arc_b, t.arc_c, t.arc_a);
    t.angle_c = angle_from_arcs(t.arc_c, t.arc_a, t.arc_b);
    return t;
}

double girard_area(const SphericalTriangle& t) {
    return (t.angle_a + t.angle_b + t.angle_c) - std::numbers::pi;
}

double lhuilier_area(double a, double b, double c) {
    require_valid_arcs(a, b, c);
    const double s = 0.5 * (a + b + c);
    const double prod = std::tan(0.5 * s) * std::tan(0.5 * (s - a)) *
                        std::tan(0.5 * (s - b)) * std::tan(0.5 * (s - c));
    // Valid arcs make every factor positive; roundoff can still push a
    // near-degenerate product a hair below zero.
    return 4.0 * std::atan(std::sqrt(std::max(prod, 0.0)));
}

SphericalTriangle hexagon_region_triangle() {
    const double h = std::sqrt(0.5);
    return triangle_from_vertices({h, h, 0.0}, {0.0, h, h}, {h, 0.0, h});
}

}  // namespace hexprob
