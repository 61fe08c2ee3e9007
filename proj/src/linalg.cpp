#include "gauge/linalg.hpp"

#include <algorithm>

namespace gauge {

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> rref(Mat& M) {
    std::vector<std::size_t> pivot_cols;
    if (M.empty()) return pivot_cols;
    const std::size_t rows = M.size(), cols = M[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && M[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(M[pr], M[r]);
        Scalar inv = Scalar(1) / M[r][c];
        for (std::size_t j = c; j < cols; ++j) M[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            Scalar f = M[i][c];
            for (std::size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

} // namespace

std::optional<LinearSystemSolution> linear_solve(const Mat& A, const Vec& b) {
    require(A.size() == b.size(), errc::dimension_mismatch, "rows of A vs b");
    const std::size_t rows = A.size();
    const std::size_t cols = rows ? A[0].size() : 0;
    for (const auto& row : A)
        require(row.size() == cols, errc::dimension_mismatch, "ragged matrix");

    Mat M(rows, Vec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) M[i][j] = A[i][j];
        M[i][cols] = b[i];
    }
    auto pivots = rref(M);

    // Inconsistent iff some pivot lands in the augmented column.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;

    LinearSystemSolution sol;
    sol.particular = zero_vec(cols);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        is_pivot[pivots[r]] = true;
        sol.particular[pivots[r]] = M[r][cols];
    }
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        Vec dir = zero_vec(cols);
        dir[c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) dir[pivots[r]] = -M[r][c];
        sol.null_basis.push_back(std::move(dir));
    }
    return sol;
}

std::optional<Vec> solve_square(const Mat& A, const Vec& b) {
    auto sol = linear_solve(A, b);
    if (!sol || !sol->null_basis.empty()) return std::nullopt;
    return sol->particular;
}

std::vector<Vec> null_space(const Mat& A) {
    if (A.empty()) return {};
    auto sol = linear_solve(A, zero_vec(A.size()));
    return sol->null_basis;
}

int rank_of(Mat A) {
    return static_cast<int>(rref(A).size());
}

Scalar det(Mat A) {
    const std::size_t n = A.size();
    for (const auto& row : A)
        require(row.size() == n, errc::dimension_mismatch, "det needs a square matrix");
    Scalar d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pr = c;
        while (pr < n && A[pr][c] == 0) ++pr;
        if (pr == n) return Scalar(0);
        if (pr != c) {
            std::swap(A[pr], A[c]);
            d = -d;
        }
        d *= A[c][c];
        Scalar inv = Scalar(1) / A[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (A[i][c] == 0) continue;
            Scalar f = A[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) A[i][j] -= f * A[c][j];
        }
    }
    return d;
}

AffineHull affine_hull(const std::vector<Vec>& points) {
    require(!points.empty(), errc::empty_input, "affine hull of empty set");
    AffineHull h;
    h.base = points[0];
    Mat diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], h.base));
    if (diffs.empty()) {
        h.dim = 0;
        return h;
    }
    // Row-reduce the differences; the nonzero rows form an exact basis.
    Mat M = diffs;
    auto pivots = rref(M);
    for (std::size_t r = 0; r < pivots.size(); ++r) h.basis.push_back(M[r]);
    h.dim = static_cast<int>(pivots.size());
    return h;
}

bool affinely_independent(const std::vector<Vec>& points) {
    if (points.empty()) return true;
    return affine_hull(points).dim == static_cast<int>(points.size()) - 1;
}

} // namespace gauge
