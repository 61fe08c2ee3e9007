#pragma once

#include <optional>
#include <vector>

#include "gauge/vec.hpp"

namespace gauge {

// Exact rational simplex with certificates.
//
// Dual conventions, verified exactly by check_solution on every solve:
//   minimize: y_i <= 0 on <=-rows, free on =-rows; z := c - A^T y has
//             z_j >= 0 on lower-bounded variables and z_j = 0 on free ones;
//             c^T x* = b^T y* + sum_j l_j z_j.
//   maximize: y_i >= 0 on <=-rows; z <= 0 on bounded variables; same identity.
//   infeasible: Farkas f with f_i >= 0 on <=-rows; g := A^T f vanishes on free
//             variables, g_j >= 0 on bounded ones, and g^T l > f^T b.
//   unbounded: ray d with a_i^T d <= 0 on <=-rows, = 0 on =-rows, d_j >= 0 on
//             bounded variables, and c^T d < 0 (min) resp. > 0 (max).

enum class Rel { le, eq };
enum class Sense { minimize, maximize };

struct LpRow {
    Vec coeffs;
    Rel rel = Rel::le;
    Scalar rhs;
};

struct LpProblem {
    Sense sense = Sense::minimize;
    Vec objective;
    std::vector<LpRow> rows;
    // Empty means all variables free; otherwise one entry per variable.
    std::vector<std::optional<Scalar>> lower_bounds;

    std::size_t num_vars() const { return objective.size(); }
    void add_row(Vec coeffs, Rel rel, Scalar rhs) {
        rows.push_back({std::move(coeffs), rel, std::move(rhs)});
    }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    std::optional<Vec> primal;
    std::optional<Scalar> objective_value;
    std::optional<Vec> dual;   // per row
    std::optional<Vec> farkas; // per row
    std::optional<Vec> ray;    // per variable
};

// Deterministic: Bland's anti-cycling rule, lowest-index tie-breaks.
// Every returned certificate is re-verified exactly before returning.
LpSolution lp_solve(const LpProblem& p, bool verify = true);

// Exact certificate check straight from the definitions above; throws
// gauge_error(errc::internal) with a description on any violation.
void check_solution(const LpProblem& p, const LpSolution& s);

} // namespace gauge
