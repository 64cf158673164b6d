// Copyright hexprob contributors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hexprob/monte_carlo.hpp"
#include "hexprob/spherical.hpp"

using namespace hexprob;

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 random_unit(std::uint64_t seed) {
    SplitMix64 rng(sample_stream_seed(seed, 0));
    return sample_unit_vector(rng);
}

// Rodrigues rotation of v about unit axis k by angle theta.
Vec3 rotate(const Vec3& v, const Vec3& k, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return v * c + cross(k, v) * s + k * (dot(k, v) * (1.0 - c));
}

// Dual law of cosines: recovers an arc from the three interior angles.
double arc_from_angles(double opposite, double angle_b, double angle_c) {
    return std::acos((std::cos(opposite) + std::cos(angle_b) * std::cos(angle_c)) /
                     (std::sin(angle_b) * std::sin(angle_c)));
}

}  // namespace

TEST_CASE("arc_length matches hand anchors") {
    const double h = std::sqrt(0.5);
    const Vec3 a{h, h, 0.0};
    const Vec3 b{0.0, h, h};
    CHECK(std::fabs(arc_length(a, b) - kPi / 3.0) <= 1e-15);
    CHECK(arc_length(a, a) == 0.0);
    CHECK(arc_length(a, -a) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(std::fabs(arc_length({1, 0, 0}, {0, 1, 0}) - kPi / 2.0) <= 1e-15);
}

TEST_CASE("arc_length rejects non-unit vectors") {
    CHECK_THROWS_AS(arc_length({1.0, 1.0, 0.0}, {1.0, 0.0, 0.0}), NotUnit);
    CHECK_THROWS_AS(arc_length({1.0, 0.0, 0.0}, {0.5, 0.0, 0.0}), NotUnit);
}

TEST_CASE("angle_from_arcs matches hand anchors") {
    const double third = std::acos(1.0 / 3.0);
    CHECK(std::fabs(angle_from_arcs(kPi / 3.0, kPi / 3.0, kPi / 3.0) - third) <= 1e-15);
    CHECK(std::fabs(angle_from_arcs(kPi / 2.0, kPi / 2.0, kPi / 2.0) - kPi / 2.0) <= 1e-15);
    // Tiny equilateral triangles approach the planar limit of pi/3.
    CHECK(angle_from_arcs(0.1, 0.1, 0.1) == doctest::Approx(kPi / 3.0).epsilon(0.01));
}

TEST_CASE("angle_from_arcs rejects degenerate configurations") {
    CHECK_THROWS_AS(angle_from_arcs(0.5, 1e-15, 0.5), DegenerateTriangle);
    CHECK_THROWS_AS(angle_from_arcs(0.5, 0.5, 0.0), DegenerateTriangle);
}

TEST_CASE("triangle_from_vertices matches the region triangle") {
    const double h = std::sqrt(0.5);
    const SphericalTriangle t = triangle_from_vertices({h, h, 0}, {0, h, h}, {h, 0, h});
    const double third = std::acos(1.0 / 3.0);
    CHECK(std::fabs(t.arc_a - kPi / 3.0) <= 1e-15);
    CHECK(std::fabs(t.arc_b - kPi / 3.0) <= 1e-15);
    CHECK(std::fabs(t.arc_c - kPi / 3.0) <= 1e-15);
    CHECK(std::fabs(t.angle_a - third) <= 1e-15);
    CHECK(std::fabs(t.angle_b - third) <= 1e-15);
    CHECK(std::fabs(t.angle_c - third) <= 1e-15);
    CHECK(std::fabs(std::cos(t.angle_a) - 1.0 / 3.0) <= 1e-15);
}

TEST_CASE("triangle_from_vertices matches the coordinate octant") {
    const SphericalTriangle t = triangle_from_vertices({1, 0, 0}, {0, 1, 0}, {0, 0, 1});
    CHECK(std::fabs(t.arc_a - kPi / 2.0) <= 1e-15);
    CHECK(std::fabs(t.angle_a - kPi / 2.0) <= 1e-15);
    CHECK(std::fabs(girard_area(t) - kPi / 2.0) <= 1e-15);
}

TEST_CASE("triangle measures are rotation invariant") {
    const double h = std::sqrt(0.5);
    const SphericalTriangle ref = triangle_from_vertices({h, h, 0}, {0, h, h}, {h, 0, h});
    for (std::uint64_t i = 0; i < 25; ++i) {
        const Vec3 axis = random_unit(100 + i);
        const double theta = 0.1 + 0.23 * static_cast<double>(i);
        const Vec3 a = rotate(ref.va, axis, theta);
        const Vec3 b = rotate(ref.vb, axis, theta);
        const Vec3 c = rotate(ref.vc, axis, theta);
        const SphericalTriangle t = triangle_from_vertices(a, b, c);
        CHECK(std::fabs(t.arc_a - ref.arc_a) <= 1e-12);
        CHECK(std::fabs(t.angle_b - ref.angle_b) <= 1e-12);
        CHECK(std::fabs(girard_area(t) - girard_area(ref)) <= 1e-12);
    }
}

TEST_CASE("triangle_from_vertices rejects coincident or antipodal vertices") {
    const Vec3 a{1, 0, 0};
    const Vec3 b{0, 1, 0};
    CHECK_THROWS_AS(triangle_from_vertices(a, a, b), DegenerateTriangle);
    CHECK_THROWS_AS(triangle_from_vertices(a, -a, b), DegenerateTriangle);
}

TEST_CASE("girard_area matches the region triangle excess") {
    const double expected = 3.0 * std::acos(1.0 / 3.0) - kPi;
    CHECK(std::fabs(girard_area(hexagon_region_triangle()) - expected) <= 1e-15);
}

TEST_CASE("girard and lhuilier agree") {
    const SphericalTriangle reg = hexagon_region_triangle();
    CHECK(std::fabs(girard_area(reg) - lhuilier_area(reg.arc_a, reg.arc_b, reg.arc_c)) <= 1e-12);

    // Random triangles: vertices drawn from the deterministic sampler.
    std::size_t formed = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        const Vec3 a = random_unit(3 * i);
        const Vec3 b = random_unit(3 * i + 1);
        const Vec3 c = random_unit(3 * i + 2);
        SphericalTriangle t;
        try {
            t = triangle_from_vertices(a, b, c);
        } catch (const DegenerateTriangle&) {
            continue;
        }
        ++formed;
        const double g = girard_area(t);
        const double l = lhuilier_area(t.arc_a, t.arc_b, t.arc_c);
        CHECK(std::fabs(g - l) <= 1e-12);
        CHECK(g >= 0.0);
        CHECK(g < 2.0 * kPi);
    }
    CHECK(formed > 190);
}

TEST_CASE("lhuilier_area validates its arcs") {
    CHECK_THROWS_AS(lhuilier_area(2.0, 1.0, 0.5), DegenerateTriangle);   // violates a < b + c
    CHECK_THROWS_AS(lhuilier_area(0.0, 1.0, 1.0), DegenerateTriangle);   // zero side
    CHECK_THROWS_AS(lhuilier_area(3.0, 3.0, 0.5), DegenerateTriangle);   // perimeter >= 2 pi
    CHECK_THROWS_AS(lhuilier_area(3.2, 1.0, 1.0), DegenerateTriangle);   // side >= pi
}

TEST_CASE("near-degenerate triangles have near-zero area") {
    const Vec3 a{1, 0, 0};
    const Vec3 b = normalized({1, 1e-6, 0});
    const Vec3 c{0, 0, 1};
    // Two vertices 1e-6 apart, third at the pole: the excess equals the tiny
    // angle at the pole, ~1e-6.
    const SphericalTriangle t = triangle_from_vertices(a, b, c);
    CHECK(girard_area(t) > 0.0);
    CHECK(girard_area(t) < 2e-6);
}

TEST_CASE("dual law of cosines closes the loop on the region triangle") {
    const SphericalTriangle t = hexagon_region_triangle();
    const double back = arc_from_angles(t.angle_a, t.angle_b, t.angle_c);
    CHECK(std::fabs(back - kPi / 3.0) <= 1e-10);
}

TEST_CASE("hexagon_region_triangle pins the exact vertices") {
    const SphericalTriangle t = hexagon_region_triangle();
    const double h = std::sqrt(0.5);
    CHECK(t.va.x == h);
    CHECK(t.va.y == h);
    CHECK(t.va.z == 0.0);
    CHECK(t.vb.x == 0.0);
    CHECK(t.vb.y == h);
    CHECK(t.vb.z == h);
    CHECK(t.vc.x == h);
    CHECK(t.vc.y == 0.0);
    CHECK(t.vc.z == h);
    CHECK(std::fabs(t.arc_a - kPi / 3.0) <= 1e-15);
}
