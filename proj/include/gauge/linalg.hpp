#pragma once

#include <optional>
#include <vector>

#include "gauge/vec.hpp"

namespace gauge {

// Exact Gaussian elimination over the rationals. Pivot choice is the first
// row with a nonzero entry in column order, so results are deterministic.

struct LinearSystemSolution {
    Vec particular;              // one solution of A x = b
    std::vector<Vec> null_basis; // basis of the null space of A
};

// A x = b; returns nullopt when the system is inconsistent.
std::optional<LinearSystemSolution> linear_solve(const Mat& A, const Vec& b);

// Unique solution of a square nonsingular system, nullopt when singular.
std::optional<Vec> solve_square(const Mat& A, const Vec& b);

std::vector<Vec> null_space(const Mat& A);

int rank_of(Mat A);

Scalar det(Mat A);

struct AffineHull {
    Vec base;                // a point of the hull
    std::vector<Vec> basis;  // exact basis of the direction space
    int dim = 0;
};

// Affine hull of a nonempty point set; dim is the rank of the difference set.
AffineHull affine_hull(const std::vector<Vec>& points);

bool affinely_independent(const std::vector<Vec>& points);

} // namespace gauge
