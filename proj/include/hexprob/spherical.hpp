// Copyright hexprob contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hexprob/errors.hpp"
#include "hexprob/vec3.hpp"

namespace hexprob {

/// Triangle on the unit sphere. Arcs are the great-circle side lengths
/// opposite each vertex; angles are the interior angles at each vertex.
/// All quantities in radians.
struct SphericalTriangle {
    Vec3 va, vb, vc;
    double arc_a = 0.0;  // side opposite va, i.e. arc from vb to vc
    double arc_b = 0.0;
    double arc_c = 0.0;
    double angle_a = 0.0;
    double angle_b = 0.0;
    double angle_c = 0.0;
};

/// Central angle between two unit vectors, arccos(clamp(u.w, -1, 1)).
/// On the unit sphere this equals the great-circle arc length.
/// Throws NotUnit if either norm deviates from 1 by more than 1e-12.
double arc_length(const Vec3& u, const Vec3& w);

/// Interior angle opposite the arc `opposite` via the spherical law of
/// cosines: arccos((cos opposite - cos b cos c) / (sin b sin c)), argument
/// clamped to [-1, 1]. Throws DegenerateTriangle if sin b sin c <= 1e-14.
double angle_from_arcs(double opposite, double b, double c);

/// Builds the full triangle: arcs from pairwise dot products, each interior
/// angle from the arc opposite it.
SphericalTriangle triangle_from_vertices(const Vec3& va, const Vec3& vb, const Vec3& vc);

/// Girard angular excess: (angle_a + angle_b + angle_c) - pi. On the unit
/// sphere this is the triangle's area in steradians.
double girard_area(const SphericalTriangle& t);

/// Area from the three arcs alone,
/// 4 atan sqrt(tan(s/2) tan((s-a)/2) tan((s-b)/2) tan((s-c)/2)), s the
/// semiperimeter. Independent cross-check of girard_area.
double lhuilier_area(double a, double b, double c);

/// The canonical first-octant region triangle with vertices
/// A(1/sqrt2, 1/sqrt2, 0), B(0, 1/sqrt2, 1/sqrt2), C(1/sqrt2, 0, 1/sqrt2):
/// the set of first-octant unit normals whose central plane cuts a hexagon.
SphericalTriangle hexagon_region_triangle();

}  // namespace hexprob
