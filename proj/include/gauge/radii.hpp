#pragma once

#include <utility>

#include "gauge/polytope.hpp"

namespace gauge {

// Gauge-relative radii: exact LPs with optimizers returned. Ties are broken
// toward the lexicographically smallest optimizer so reports are stable.

struct CircumResult {
    Scalar radius;
    Vec center;     // lex-min among optimal centers
    LpSolution lp;  // first solve, with exact duals
};

// Smallest lambda >= 0 with K in c + lambda C, via convex-combination rows
// over the vertices of C.
CircumResult circumradius(const Body& K, const Body& C);

// Same optimum through the facet description of C; the dual lives on
// (vertex of K, facet of C) pairs, which is what certificates want.
struct CircumHrepResult {
    Scalar radius;
    Vec center;
    LpSolution lp;
    std::vector<std::pair<std::size_t, std::size_t>> row_pairs; // (i, j) per row
};
CircumHrepResult circumradius_hrep(const Body& K, const Body& C);

struct InradiusResult {
    Scalar radius;
    Vec center;
};

// Largest lambda >= 0 with a translate of lambda C inside K.
InradiusResult inradius(const Body& K, const Body& C);

// b_s(K,C) = 2 h(K-K, s) / h(C-C, s).
Scalar breadth(const Body& K, const Body& C, const Vec& s);

struct DiameterResult {
    Scalar value;
    std::pair<Vec, Vec> attaining; // vertex pair of K realizing the diameter
};

DiameterResult diameter(const Body& K, const Body& C);

struct WidthResult {
    Scalar value;
    Vec direction; // facet normal of K-K attaining the minimal breadth
};

WidthResult width(const Body& K, const Body& C);

struct AsymmetryReport {
    Scalar s;            // Minkowski asymmetry R(-K, K)
    Vec minkowski_center;
    Vec translate;       // c' with -K in c' + s K
};

AsymmetryReport asymmetry(const Body& K);

Body center_at_minkowski_center(const Body& K);

// (1/2)(C - C): the symmetric gauge with the same breadths; equals C when C
// is already 0-symmetric.
Body half_symmetral(const Body& C);

struct RadiiReport {
    Scalar R, r, D, w;
    Vec circumcenter, incenter;
    std::pair<Vec, Vec> diameter_pair;
    Vec width_direction;
};

RadiiReport radii_report(const Body& K, const Body& C);

} // namespace gauge
