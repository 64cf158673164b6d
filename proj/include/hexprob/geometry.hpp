// Copyright hexprob contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "hexprob/errors.hpp"
#include "hexprob/vec3.hpp"

namespace hexprob {

/// Direction (a,b,c) of a central plane a*x + b*y + c*z = 0. Need not be unit
/// length; classification is scale invariant. Must be nonzero and finite.
struct Normal {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    Vec3 vec() const { return {a, b, c}; }
    double magnitude() const { return std::sqrt(a * a + b * b + c * c); }
};

enum class SectionKind : std::uint8_t {
    Quadrilateral = 0,
    BoundaryQuadrilateral = 1,
    Hexagon = 2,
};

const char* to_string(SectionKind kind);

/// eps_boundary detects ties in the triangle-inequality test; eps_geometry is
/// the point-coincidence / on-surface tolerance. Both strictly positive,
/// eps_boundary <= eps_geometry.
struct Tolerance {
    double eps_boundary = 1e-12;
    double eps_geometry = 1e-9;
};

/// Cross-section of the cube [-1,1]^3 with the central plane normal to
/// `normal`: vertices ordered counterclockwise as seen from the normal
/// direction, centrally symmetric, 6 of them iff kind == Hexagon else 4.
struct SectionPolygon {
    std::vector<Vec3> vertices;
    SectionKind kind = SectionKind::Quadrilateral;
    Normal normal;
};

namespace detail {

/// Components |a|,|b|,|c| scaled by their maximum and sorted descending,
/// so p == 1 exactly.
struct SortedAbs {
    double p;
    double q;
    double r;
};

// Shared between classify() and the Monte Carlo kernels; the SIMD kernel
// mirrors this operation sequence exactly, so edits here are semantic changes
// to the sampling contract.
inline SortedAbs sorted_abs_components(double a, double b, double c) {
    double aa = std::fabs(a);
    double ab = std::fabs(b);
    double ac = std::fabs(c);
    double m = std::max(aa, std::max(ab, ac));
    double na = aa / m;
    double nb = ab / m;
    double nc = ac / m;
    double p = std::max(na, std::max(nb, nc));
    double r = std::min(na, std::min(nb, nc));
    double q = std::max(std::min(na, nb), std::min(std::max(na, nb), nc));
    return {p, q, r};
}

inline SectionKind classify_sorted(const SortedAbs& s, double eps_boundary) {
    double qr = s.q + s.r;
    if (s.p < qr - eps_boundary) {
        return SectionKind::Hexagon;
    }
    if (std::fabs(s.p - qr) <= eps_boundary) {
        return SectionKind::BoundaryQuadrilateral;
    }
    return SectionKind::Quadrilateral;
}

}  // namespace detail

/// Section class of the plane normal to n. Hexagon iff the sorted scaled
/// absolute components satisfy the strict triangle inequality p < q + r;
/// ties within eps_boundary report BoundaryQuadrilateral. Invariant under
/// scaling, sign flips, and coordinate permutation.
SectionKind classify(const Normal& n, const Tolerance& tol = {});

/// The sorted scaled absolute components (p, q, r) used by classify().
detail::SortedAbs sorted_abs_normalized(const Normal& n);

/// The six closed-form edge intersections for a first-octant hexagonal
/// section: +/-((b-c)/a, -1, 1), +/-(-1, (a-c)/b, 1), +/-(-1, 1, (a-b)/c),
/// ordered counterclockwise around n. Requires a,b,c > 0 and a hexagonal
/// class, else DomainError.
SectionPolygon section_vertices_first_octant(const Normal& n);

/// Full section polygon for any nonzero n: hexagon via the closed-form
/// first-octant construction mapped through sign flips, quadrilateral (and
/// boundary) via the four crossings of the edges parallel to the dominant
/// axis. Coincident vertices are merged within eps_geometry.
SectionPolygon section_polygon(const Normal& n, const Tolerance& tol = {});

/// Independent oracle: clip all 12 cube edges against the plane. For each
/// edge with signed endpoint distances s0, s1 it records the interpolated
/// crossing when s0*s1 < 0 and the endpoint itself when |si| <= eps_geometry,
/// then deduplicates and orders counterclockwise.
SectionPolygon oracle_edge_clip(const Normal& n, const Tolerance& tol = {});

/// Planar polygon area by fan triangulation from the origin,
/// 1/2 * sum |v_i x v_{i+1}|. Requires >= 3 distinct vertices.
double polygon_area(const SectionPolygon& poly);

}  // namespace hexprob
