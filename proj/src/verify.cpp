// Copyright hexprob contributors
// SPDX-License-Identifier: Apache-2.0
#include "hexprob/verify.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "hexprob/monte_carlo.hpp"

namespace hexprob {

namespace {

constexpr std::array<std::array<int, 3>, 6> kPermutations{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};
constexpr std::array<double, 3> kScales{-2.0, 0.5, 1e6};

bool vertex_sets_match(const std::vector<Vec3>& a, const std::vector<Vec3>& b,
                       double eps) {
    if (a.size() != b.size()) {
        return false;
    }
    std::vector<bool> used(b.size(), false);
    for (const Vec3& p : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!used[j] && norm(p - b[j]) <= eps) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

bool symmetry_holds(const Normal& n, SectionKind kind, const Tolerance& tol) {
    const std::array<double, 3> c{n.a, n.b, n.c};
    for (const auto& perm : kPermutations) {
        for (int signs = 0; signs < 8; ++signs) {
            const Normal image{(signs & 1 ? -1.0 : 1.0) * c[perm[0]],
                               (signs & 2 ? -1.0 : 1.0) * c[perm[1]],
                               (signs & 4 ? -1.0 : 1.0) * c[perm[2]]};
            if (classify(image, tol) != kind) {
                return false;
            }
        }
    }
    for (const double s : kScales) {
        if (classify(Normal{n.a * s, n.b * s, n.c * s}, tol) != kind) {
            return false;
        }
    }
    return true;
}

bool invariants_hold(const SectionPolygon& poly, const Vec3& unit_n,
                     const Tolerance& tol) {
    const std::size_t count = poly.vertices.size();
    const std::size_t expected = poly.kind == SectionKind::Hexagon ? 6 : 4;
    if (count != expected) {
        return false;
    }
    for (const Vec3& v : poly.vertices) {
        if (std::fabs(dot(unit_n, v)) > tol.eps_geometry) {
            return false;  // off plane
        }
        if (std::fabs(max_abs(v) - 1.0) > tol.eps_geometry) {
            return false;  // off the cube surface
        }
    }
    for (const Vec3& v : poly.vertices) {  // central symmetry
        bool found = false;
        for (const Vec3& w : poly.vertices) {
            if (norm(v + w) <= tol.eps_geometry) {
                found = true;
                break;
            }
        }
        if (!found) {
            return false;
        }
    }
    for (std::size_t i = 0; i < count; ++i) {  // counterclockwise around n
        const Vec3& a = poly.vertices[i];
        const Vec3& b = poly.vertices[(i + 1) % count];
        const Vec3& c = poly.vertices[(i + 2) % count];
        if (dot(cross(b - a, c - b), unit_n) <= 0.0) {
            return false;
        }
    }
    const double area = polygon_area(poly);
    const double max_area = 4.0 * std::sqrt(2.0);
    return area >= 4.0 - tol.eps_geometry && area <= max_area + tol.eps_geometry;
}

}  // namespace

VerifyCounts run_verification(std::uint64_t trials, std::uint64_t seed,
                              const Tolerance& tol) {
    VerifyCounts counts;
    counts.trials = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Vec3 v = sample_at(seed, t);
        const Normal n{v.x, v.y, v.z};
        const SectionKind kind = classify(n, tol);
        const SectionPolygon poly = section_polygon(n, tol);

        const detail::SortedAbs s = sorted_abs_normalized(n);
        const bool near_boundary =
            std::fabs(s.p - (s.q + s.r)) <= 10.0 * tol.eps_boundary;
        if (!near_boundary) {
            const SectionPolygon oracle = oracle_edge_clip(n, tol);
            const std::size_t expected = kind == SectionKind::Hexagon ? 6 : 4;
            const bool agree =
                poly.kind == kind && oracle.vertices.size() == expected &&
                vertex_sets_match(poly.vertices, oracle.vertices, tol.eps_geometry);
            if (!agree) {
                ++counts.oracle_mismatches;
            }
        }

        if (!symmetry_holds(n, kind, tol)) {
            ++counts.symmetry_violations;
        }
        if (!invariants_hold(poly, v, tol)) {
            ++counts.invariant_failures;
        }
    }
    return counts;
}

}  // namespace hexprob
