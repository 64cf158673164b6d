// Copyright hexprob contributors
// SPDX-License-Identifier: Apache-2.0
#include "hexprob/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <utility>

namespace hexprob {

namespace {

// Identity tolerance for "distinct vertex" counting in polygon_area, which
// carries no Tolerance of its own.
constexpr double kDistinctEps = 1e-12;

void require_nonzero(const Normal& n) {
    bool finite = std::isfinite(n.a) && std::isfinite(n.b) && std::isfinite(n.c);
    if (!finite || (n.a == 0.0 && n.b == 0.0 && n.c == 0.0)) {
        throw ZeroNormal("normal must be finite and nonzero");
    }
}

void require_valid(const Tolerance& tol) {
    if (!(tol.eps_boundary > 0.0) || !(tol.eps_geometry > 0.0) ||
        tol.eps_boundary > tol.eps_geometry) {
        throw DomainError("tolerance requires 0 < eps_boundary <= eps_geometry");
    }
}

// Signed permutation taking n into the canonical octant/order A >= B >= C >= 0.
// Canonical coordinates X_j = sign[j] * x_{axis[j]}, so the canonical plane is
// A*X0 + B*X1 + C*X2 = 0 over the same cube.
struct Frame {
    std::array<int, 3> axis;
    std::array<double, 3> sign;
    std::array<double, 3> comp;  // A, B, C
};

Frame canonical_frame(const Normal& n) {
    const std::array<double, 3> c{n.a, n.b, n.c};
    std::array<int, 3> idx{0, 1, 2};
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int l, int r) { return std::fabs(c[l]) > std::fabs(c[r]); });
    Frame f;
    for (int j = 0; j < 3; ++j) {
        f.axis[j] = idx[j];
        f.sign[j] = c[idx[j]] < 0.0 ? -1.0 : 1.0;
        f.comp[j] = std::fabs(c[idx[j]]);
    }
    return f;
}

Vec3 from_canonical(const Frame& f, const Vec3& p) {
    const std::array<double, 3> pc{p.x, p.y, p.z};
    std::array<double, 3> out{};
    for (int j = 0; j < 3; ++j) {
        out[f.axis[j]] = f.sign[j] * pc[j];
    }
    return {out[0], out[1], out[2]};
}

// The six closed-form edge crossings of a hexagonal section, a,b,c > 0.
// Every quotient has magnitude < 1 by the triangle inequalities, and the
// numerators are exact by Sterbenz whenever the divisor is small, so the
// construction is stable arbitrarily close to the boundary.
std::array<Vec3, 6> hexagon_formula_vertices(double a, double b, double c) {
    const Vec3 h0{(b - c) / a, -1.0, 1.0};
    const Vec3 h1{-1.0, (a - c) / b, 1.0};
    const Vec3 h2{-1.0, 1.0, (a - b) / c};
    return {h0, h1, h2, -h0, -h1, -h2};
}

// Quadrilateral section in the canonical frame (a >= b >= c >= 0, b + c <= a):
// the plane meets only the four edges parallel to the dominant axis, at
// x = -/+(b +/- c)/a. Divides only by the largest component. At the exact
// boundary b + c = a the first pair lands on the cube corners.
std::array<Vec3, 4> quad_formula_vertices(double a, double b, double c) {
    const Vec3 q0{-(b + c) / a, 1.0, 1.0};
    const Vec3 q1{-(b - c) / a, 1.0, -1.0};
    return {q0, q1, -q0, -q1};
}

void dedup_within(std::vector<Vec3>& pts, double eps) {
    std::vector<Vec3> out;
    out.reserve(pts.size());
    for (const Vec3& p : pts) {
        bool seen = false;
        for (const Vec3& q : out) {
            if (norm(p - q) <= eps) {
                seen = true;
                break;
            }
        }
        if (!seen) {
            out.push_back(p);
        }
    }
    pts = std::move(out);
}

// Deterministic in-plane orthonormal basis: the coordinate axis least aligned
// with n, crossed with n, then completed right-handed.
std::pair<Vec3, Vec3> plane_basis(const Vec3& unit_n) {
    const double ax = std::fabs(unit_n.x);
    const double ay = std::fabs(unit_n.y);
    const double az = std::fabs(unit_n.z);
    Vec3 e{0.0, 0.0, 1.0};
    if (ax <= ay && ax <= az) {
        e = {1.0, 0.0, 0.0};
    } else if (ay <= az) {
        e = {0.0, 1.0, 0.0};
    }
    const Vec3 u = normalized(cross(e, unit_n));
    const Vec3 v = cross(unit_n, u);
    return {u, v};
}

// Counterclockwise as seen from the normal direction. A centrally symmetric
// vertex set sorted this way automatically pairs antipodes i and i + m.
void order_ccw(std::vector<Vec3>& pts, const Vec3& unit_n) {
    const auto [u, v] = plane_basis(unit_n);
    std::sort(pts.begin(), pts.end(), [&](const Vec3& l, const Vec3& r) {
        return std::atan2(dot(l, v), dot(l, u)) < std::atan2(dot(r, v), dot(r, u));
    });
}

}  // namespace

const char* to_string(SectionKind kind) {
    switch (kind) {
        case SectionKind::Quadrilateral: return "Quadrilateral";
        case SectionKind::BoundaryQuadrilateral: return "BoundaryQuadrilateral";
        case SectionKind::Hexagon: return "Hexagon";
    }
    return "Unknown";
}

SectionKind classify(const Normal& n, const Tolerance& tol) {
    require_nonzero(n);
    require_valid(tol);
    return detail::classify_sorted(detail::sorted_abs_components(n.a, n.b, n.c),
                                   tol.eps_boundary);
}

detail::SortedAbs sorted_abs_normalized(const Normal& n) {
    require_nonzero(n);
    return detail::sorted_abs_components(n.a, n.b, n.c);
}

SectionPolygon section_vertices_first_octant(const Normal& n) {
    require_nonzero(n);
    if (!(n.a > 0.0) || !(n.b > 0.0) || !(n.c > 0.0)) {
        throw DomainError("section_vertices_first_octant requires a, b, c > 0");
    }
    if (classify(n) != SectionKind::Hexagon) {
        throw DomainError("section_vertices_first_octant requires a hexagonal section");
    }
    const auto six = hexagon_formula_vertices(n.a, n.b, n.c);
    std::vector<Vec3> pts(six.begin(), six.end());
    order_ccw(pts, normalized(n.vec()));
    return {std::move(pts), SectionKind::Hexagon, n};
}

SectionPolygon section_polygon(const Normal& n, const Tolerance& tol) {
    require_nonzero(n);
    require_valid(tol);
    const SectionKind kind = classify(n, tol);
    const Frame f = canonical_frame(n);

    std::vector<Vec3> pts;
    if (kind == SectionKind::Hexagon) {
        for (const Vec3& p : hexagon_formula_vertices(f.comp[0], f.comp[1], f.comp[2])) {
            pts.push_back(from_canonical(f, p));
        }
    } else {
        for (const Vec3& p : quad_formula_vertices(f.comp[0], f.comp[1], f.comp[2])) {
            pts.push_back(from_canonical(f, p));
        }
    }
    dedup_within(pts, tol.eps_geometry);
    order_ccw(pts, normalized(n.vec()));
    return {std::move(pts), kind, n};
}

SectionPolygon oracle_edge_clip(const Normal& n, const Tolerance& tol) {
    require_nonzero(n);
    require_valid(tol);
    const Vec3 unit_n = normalized(n.vec());

    std::vector<Vec3> pts;
    // Edges run parallel to `axis` between the corners with the other two
    // coordinates fixed at +/-1.
    for (int axis = 0; axis < 3; ++axis) {
        for (int s1 = -1; s1 <= 1; s1 += 2) {
            for (int s2 = -1; s2 <= 1; s2 += 2) {
                std::array<double, 3> lo{}, hi{};
                lo[axis] = -1.0;
                hi[axis] = 1.0;
                lo[(axis + 1) % 3] = hi[(axis + 1) % 3] = static_cast<double>(s1);
                lo[(axis + 2) % 3] = hi[(axis + 2) % 3] = static_cast<double>(s2);
                const Vec3 p0{lo[0], lo[1], lo[2]};
                const Vec3 p1{hi[0], hi[1], hi[2]};
                const double d0 = dot(unit_n, p0);
                const double d1 = dot(unit_n, p1);
                if (std::fabs(d0) <= tol.eps_geometry) {
                    pts.push_back(p0);
                }
                if (std::fabs(d1) <= tol.eps_geometry) {
                    pts.push_back(p1);
                }
                if (d0 * d1 < 0.0) {
                    pts.push_back(p0 + (p1 - p0) * (d0 / (d0 - d1)));
                }
            }
        }
    }
    dedup_within(pts, tol.eps_geometry);
    order_ccw(pts, unit_n);
    return {std::move(pts), classify(n, tol), n};
}

double polygon_area(const SectionPolygon& poly) {
    const auto& v = poly.vertices;
    std::size_t distinct = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        bool repeat = false;
        for (std::size_t j = 0; j < i; ++j) {
            if (norm(v[i] - v[j]) <= kDistinctEps) {
                repeat = true;
                break;
            }
        }
        if (!repeat) {
            ++distinct;
        }
    }
    if (distinct < 3) {
        throw DegeneratePolygon("polygon_area requires at least 3 distinct vertices");
    }
    // The origin lies inside every central section, so the fan from the origin
    // tiles the polygon exactly.
    double area = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        area += 0.5 * norm(cross(v[i], v[(i + 1) % v.size()]));
    }
    return area;
}

}  // namespace hexprob
