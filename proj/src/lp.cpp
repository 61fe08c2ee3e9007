#include "gauge/lp.hpp"

#include <algorithm>
#include <limits>

namespace gauge {

namespace {

enum class ColKind { structural_pos, structural_neg, slack, artificial };

struct Column {
    ColKind kind;
    std::size_t index; // variable index, or row index for slack/artificial
};

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Full dense tableau over the rationals. Rows are kept in original order
// (maybe minus rows dropped as redundant after phase 1); column layout is
// structural columns first, then slacks, then artificials, which makes
// Bland's lowest-index rule deterministic across runs.
class Simplex {
public:
    Simplex(const LpProblem& p) : p_(p) {
        validate();
        build();
    }

    LpSolution run() {
        if (!phase1()) return infeasible_result();
        drive_out_artificials();
        return phase2();
    }

private:
    const LpProblem& p_;
    bool maximize_ = false;
    std::size_t nvars_ = 0;

    std::vector<Column> cols_;
    std::vector<std::size_t> var_pos_col_, var_neg_col_; // npos when absent
    Vec shift_; // lower bound per variable (0 for free vars)

    std::vector<Vec> rows_;            // coefficient rows incl. rhs at back
    std::vector<int> row_sign_;        // +1/-1 applied to reach rhs >= 0
    std::vector<std::size_t> row_orig_; // original row index per tableau row
    std::vector<std::size_t> basis_;   // basic column per tableau row
    std::vector<std::size_t> init_col_; // initial basic column per tableau row
    Vec obj_;                          // reduced costs, size ncols
    Vec farkas_;                       // filled on phase-1 failure

    std::size_t ncols() const { return cols_.size(); }

    void validate() const {
        const std::size_t n = p_.num_vars();
        for (const auto& row : p_.rows)
            require(row.coeffs.size() == n, errc::dimension_mismatch, "LP row width");
        require(p_.lower_bounds.empty() || p_.lower_bounds.size() == n,
                errc::dimension_mismatch, "LP bounds width");
    }

    bool bounded_var(std::size_t j) const {
        return !p_.lower_bounds.empty() && p_.lower_bounds[j].has_value();
    }

    Scalar user_cost(std::size_t j) const {
        return maximize_ ? Scalar(-p_.objective[j]) : p_.objective[j];
    }

    void build() {
        maximize_ = p_.sense == Sense::maximize;
        nvars_ = p_.num_vars();
        var_pos_col_.assign(nvars_, npos);
        var_neg_col_.assign(nvars_, npos);
        shift_ = zero_vec(nvars_);

        for (std::size_t j = 0; j < nvars_; ++j) {
            var_pos_col_[j] = cols_.size();
            cols_.push_back({ColKind::structural_pos, j});
            if (bounded_var(j)) {
                shift_[j] = *p_.lower_bounds[j];
            } else {
                var_neg_col_[j] = cols_.size();
                cols_.push_back({ColKind::structural_neg, j});
            }
        }
        std::vector<std::size_t> slack_col(p_.rows.size(), npos);
        for (std::size_t i = 0; i < p_.rows.size(); ++i) {
            if (p_.rows[i].rel == Rel::le) {
                slack_col[i] = cols_.size();
                cols_.push_back({ColKind::slack, i});
            }
        }

        const std::size_t m = p_.rows.size();
        rows_.assign(m, Vec());
        row_sign_.assign(m, 1);
        row_orig_.resize(m);
        basis_.assign(m, npos);
        init_col_.assign(m, npos);

        // Row layout: coefficient entries per column, rhs in the back slot.
        std::size_t structural_end = cols_.size();
        for (std::size_t i = 0; i < m; ++i) {
            row_orig_[i] = i;
            Vec row(structural_end, Scalar(0));
            Scalar rhs = p_.rows[i].rhs;
            for (std::size_t j = 0; j < nvars_; ++j) {
                const Scalar& a = p_.rows[i].coeffs[j];
                if (a == 0) continue;
                row[var_pos_col_[j]] = a;
                if (var_neg_col_[j] != npos) row[var_neg_col_[j]] = -a;
                rhs -= a * shift_[j];
            }
            if (slack_col[i] != npos) row[slack_col[i]] = 1;
            if (rhs < 0) {
                row_sign_[i] = -1;
                for (auto& x : row) x = -x;
                rhs = -rhs;
            }
            row.push_back(rhs);
            rows_[i] = std::move(row);
        }
        // Artificial columns for rows whose slack cannot start basic.
        for (std::size_t i = 0; i < m; ++i) {
            if (slack_col[i] != npos && row_sign_[i] == 1) {
                basis_[i] = slack_col[i];
                init_col_[i] = slack_col[i];
            } else {
                std::size_t c = cols_.size();
                cols_.push_back({ColKind::artificial, i});
                for (std::size_t r = 0; r < m; ++r) {
                    Scalar rhs = rows_[r].back();
                    rows_[r].back() = (r == i) ? Scalar(1) : Scalar(0);
                    rows_[r].push_back(rhs);
                }
                basis_[i] = c;
                init_col_[i] = c;
            }
        }
    }

    Scalar& rhs(std::size_t i) { return rows_[i].back(); }
    const Scalar& rhs(std::size_t i) const { return rows_[i].back(); }

    void pivot(std::size_t prow, std::size_t pcol) {
        Vec& row = rows_[prow];
        Scalar inv = Scalar(1) / row[pcol];
        for (auto& x : row) x *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == prow || rows_[i][pcol] == 0) continue;
            Scalar f = rows_[i][pcol];
            Vec& target = rows_[i];
            for (std::size_t j = 0; j < target.size(); ++j) target[j] -= f * row[j];
        }
        if (obj_[pcol] != 0) {
            Scalar f = obj_[pcol];
            for (std::size_t j = 0; j < obj_.size(); ++j) obj_[j] -= f * row[j];
        }
        basis_[prow] = pcol;
    }

    // obj_ has ncols reduced-cost entries plus the negated objective value.
    void recompute_obj(const Vec& costs) {
        obj_.assign(ncols() + 1, Scalar(0));
        for (std::size_t j = 0; j < ncols(); ++j) obj_[j] = costs[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Scalar& cb = costs[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j <= ncols(); ++j) obj_[j] -= cb * rows_[i][j];
        }
    }

    // Bland: entering = lowest-index column with negative reduced cost.
    std::size_t entering() const {
        for (std::size_t j = 0; j < ncols(); ++j) {
            if (cols_[j].kind == ColKind::artificial) continue;
            if (obj_[j] < 0) return j;
        }
        return npos;
    }

    // Lowest basic-variable index among the minimum-ratio rows.
    std::size_t leaving(std::size_t pcol) const {
        std::size_t best = npos;
        Scalar best_ratio;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i][pcol] <= 0) continue;
            Scalar ratio = rhs(i) / rows_[i][pcol];
            if (best == npos || ratio < best_ratio ||
                (ratio == best_ratio && basis_[i] < basis_[best])) {
                best = i;
                best_ratio = ratio;
            }
        }
        return best;
    }

    bool phase1() {
        Vec costs(ncols(), Scalar(0));
        bool any_artificial = false;
        for (std::size_t j = 0; j < ncols(); ++j) {
            if (cols_[j].kind == ColKind::artificial) {
                costs[j] = 1;
                any_artificial = true;
            }
        }
        if (!any_artificial) {
            recompute_obj(Vec(ncols(), Scalar(0)));
            return true;
        }
        recompute_obj(costs);
        while (true) {
            std::size_t e = entering();
            if (e == npos) break;
            std::size_t l = leaving(e);
            require(l != npos, errc::internal, "phase-1 objective is bounded");
            pivot(l, e);
        }
        Scalar value = -obj_.back();
        if (value == 0) return true;

        // y from the phase-1 reduced costs of the initial basic columns gives
        // an exact Farkas certificate for the original rows.
        farkas_ = zero_vec(p_.rows.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Scalar init_cost = cols_[init_col_[i]].kind == ColKind::artificial
                                   ? Scalar(1)
                                   : Scalar(0);
            Scalar y = init_cost - obj_[init_col_[i]];
            farkas_[row_orig_[i]] = Scalar(-row_sign_[i]) * y;
        }
        return false;
    }

    LpSolution infeasible_result() {
        LpSolution s;
        s.status = LpStatus::infeasible;
        s.farkas = farkas_;
        return s;
    }

    void drop_row(std::size_t i) {
        rows_.erase(rows_.begin() + i);
        basis_.erase(basis_.begin() + i);
        init_col_.erase(init_col_.begin() + i);
        row_orig_.erase(row_orig_.begin() + i);
    }

    // A basic artificial at level zero either pivots out on some structural
    // or slack column, or its row is redundant and can be removed.
    void drive_out_artificials() {
        for (std::size_t i = rows_.size(); i-- > 0;) {
            if (cols_[basis_[i]].kind != ColKind::artificial) continue;
            std::size_t pcol = npos;
            for (std::size_t j = 0; j < ncols(); ++j) {
                if (cols_[j].kind == ColKind::artificial) continue;
                if (rows_[i][j] != 0) {
                    pcol = j;
                    break;
                }
            }
            if (pcol == npos) {
                drop_row(i);
            } else {
                pivot(i, pcol);
            }
        }
    }

    LpSolution phase2() {
        Vec costs(ncols(), Scalar(0));
        for (std::size_t j = 0; j < ncols(); ++j) {
            if (cols_[j].kind == ColKind::structural_pos)
                costs[j] = user_cost(cols_[j].index);
            else if (cols_[j].kind == ColKind::structural_neg)
                costs[j] = -user_cost(cols_[j].index);
        }
        recompute_obj(costs);
        while (true) {
            std::size_t e = entering();
            if (e == npos) break;
            std::size_t l = leaving(e);
            if (l == npos) return unbounded_result(e);
            pivot(l, e);
        }
        return optimal_result();
    }

    LpSolution unbounded_result(std::size_t enter) {
        Vec d_std(ncols(), Scalar(0));
        d_std[enter] = 1;
        for (std::size_t i = 0; i < rows_.size(); ++i) d_std[basis_[i]] = -rows_[i][enter];
        Vec ray = zero_vec(nvars_);
        for (std::size_t j = 0; j < ncols(); ++j) {
            if (d_std[j] == 0) continue;
            if (cols_[j].kind == ColKind::structural_pos)
                ray[cols_[j].index] += d_std[j];
            else if (cols_[j].kind == ColKind::structural_neg)
                ray[cols_[j].index] -= d_std[j];
        }
        LpSolution s;
        s.status = LpStatus::unbounded;
        s.ray = std::move(ray);
        return s;
    }

    LpSolution optimal_result() {
        Vec x_std(ncols(), Scalar(0));
        for (std::size_t i = 0; i < rows_.size(); ++i) x_std[basis_[i]] = rhs(i);
        Vec x = shift_;
        for (std::size_t j = 0; j < ncols(); ++j) {
            if (x_std[j] == 0) continue;
            if (cols_[j].kind == ColKind::structural_pos)
                x[cols_[j].index] += x_std[j];
            else if (cols_[j].kind == ColKind::structural_neg)
                x[cols_[j].index] -= x_std[j];
        }

        Vec y = zero_vec(p_.rows.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Scalar y_std = -obj_[init_col_[i]];
            Scalar y_min = Scalar(row_sign_[i]) * y_std;
            y[row_orig_[i]] = maximize_ ? Scalar(-y_min) : y_min;
        }

        LpSolution s;
        s.status = LpStatus::optimal;
        s.objective_value = dot(p_.objective, x);
        s.primal = std::move(x);
        s.dual = std::move(y);
        return s;
    }
};

[[noreturn]] void cert_fail(const std::string& what) {
    fail(errc::internal, "LP certificate violation: " + what);
}

} // namespace

LpSolution lp_solve(const LpProblem& p, bool verify) {
    Simplex solver(p);
    LpSolution s = solver.run();
    if (verify) check_solution(p, s);
    return s;
}

void check_solution(const LpProblem& p, const LpSolution& s) {
    const std::size_t n = p.num_vars();
    const bool maximize = p.sense == Sense::maximize;
    auto lower = [&](std::size_t j) -> const std::optional<Scalar>& {
        static const std::optional<Scalar> none;
        return p.lower_bounds.empty() ? none : p.lower_bounds[j];
    };

    switch (s.status) {
        case LpStatus::optimal: {
            if (!s.primal || !s.dual || !s.objective_value) cert_fail("missing optimal fields");
            const Vec& x = *s.primal;
            const Vec& y = *s.dual;
            if (x.size() != n || y.size() != p.rows.size()) cert_fail("field sizes");
            for (std::size_t i = 0; i < p.rows.size(); ++i) {
                Scalar lhs = dot(p.rows[i].coeffs, x);
                if (p.rows[i].rel == Rel::eq && lhs != p.rows[i].rhs) cert_fail("primal =");
                if (p.rows[i].rel == Rel::le && lhs > p.rows[i].rhs) cert_fail("primal <=");
                if (y[i] * (lhs - p.rows[i].rhs) != 0) cert_fail("complementary slackness (row)");
                if (p.rows[i].rel == Rel::le) {
                    if (!maximize && y[i] > 0) cert_fail("dual sign (min)");
                    if (maximize && y[i] < 0) cert_fail("dual sign (max)");
                }
            }
            Scalar dual_value = 0;
            for (std::size_t i = 0; i < p.rows.size(); ++i) dual_value += y[i] * p.rows[i].rhs;
            for (std::size_t j = 0; j < n; ++j) {
                Scalar z = p.objective[j];
                for (std::size_t i = 0; i < p.rows.size(); ++i)
                    z -= y[i] * p.rows[i].coeffs[j];
                if (!lower(j)) {
                    if (z != 0) cert_fail("reduced cost on free variable");
                    continue;
                }
                if (x[j] < *lower(j)) cert_fail("primal bound");
                if (!maximize && z < 0) cert_fail("reduced cost sign (min)");
                if (maximize && z > 0) cert_fail("reduced cost sign (max)");
                if (z * (x[j] - *lower(j)) != 0) cert_fail("complementary slackness (bound)");
                dual_value += z * *lower(j);
            }
            if (dot(p.objective, x) != *s.objective_value) cert_fail("objective value");
            if (dual_value != *s.objective_value) cert_fail("strong duality");
            return;
        }
        case LpStatus::infeasible: {
            if (!s.farkas) cert_fail("missing Farkas certificate");
            const Vec& f = *s.farkas;
            if (f.size() != p.rows.size()) cert_fail("Farkas size");
            Vec g = zero_vec(n);
            Scalar fb = 0;
            for (std::size_t i = 0; i < p.rows.size(); ++i) {
                if (p.rows[i].rel == Rel::le && f[i] < 0) cert_fail("Farkas sign");
                for (std::size_t j = 0; j < n; ++j) g[j] += f[i] * p.rows[i].coeffs[j];
                fb += f[i] * p.rows[i].rhs;
            }
            Scalar gl = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (!lower(j)) {
                    if (g[j] != 0) cert_fail("Farkas aggregate on free variable");
                } else {
                    if (g[j] < 0) cert_fail("Farkas aggregate sign");
                    gl += g[j] * *lower(j);
                }
            }
            if (!(gl > fb)) cert_fail("Farkas contradiction value");
            return;
        }
        case LpStatus::unbounded: {
            if (!s.ray) cert_fail("missing ray");
            const Vec& d = *s.ray;
            if (d.size() != n) cert_fail("ray size");
            for (std::size_t i = 0; i < p.rows.size(); ++i) {
                Scalar ad = dot(p.rows[i].coeffs, d);
                if (p.rows[i].rel == Rel::eq && ad != 0) cert_fail("ray on =");
                if (p.rows[i].rel == Rel::le && ad > 0) cert_fail("ray on <=");
            }
            for (std::size_t j = 0; j < n; ++j)
                if (lower(j) && d[j] < 0) cert_fail("ray bound sign");
            Scalar cd = dot(p.objective, d);
            if (!maximize && cd >= 0) cert_fail("ray does not improve (min)");
            if (maximize && cd <= 0) cert_fail("ray does not improve (max)");
            return;
        }
    }
    cert_fail("unknown status");
}

} // namespace gauge
