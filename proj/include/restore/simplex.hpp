#pragma once

// Dense tableau simplex for covering-type linear programs
//
//     minimize c'x  subject to  A x >= b,  x >= 0.
//
// The solver works on the dual (maximize b'y s.t. A'y <= c, y >= 0). When
// c >= 0 the slack basis of the dual is feasible and no phase one is needed,
// and appending a primal row only appends a dual column, so the current
// basis stays feasible and the cutting-plane loop warm-starts for free.
// Primal values are read off the reduced costs of the dual slacks.

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "restore/error.hpp"

namespace restore {

struct LpTerm {
    std::size_t var = 0;
    double coef = 0.0;
};

struct LpRow {
    std::vector<LpTerm> terms;  // sum coef * x[var] >= rhs
    double rhs = 0.0;
    std::string label;
};

struct LinearProgram {
    std::vector<double> objective;  // minimized; one entry per variable
    std::vector<std::string> names;
    std::vector<LpRow> rows;

    std::size_t var_count() const { return objective.size(); }

    double activity(const LpRow& row, const std::vector<double>& x) const {
        double s = 0.0;
        for (const auto& t : row.terms) s += t.coef * x[t.var];
        return s;
    }
};

struct LpResult {
    std::vector<double> x;
    double objective = 0.0;
    std::size_t pivots = 0;
    double max_violation = 0.0;  // relative, over all rows
};

struct SimplexOptions {
    double tolerance = 1e-9;
    std::size_t max_pivots = 1'000'000;
    // Dantzig pricing falls back to Bland's rule after this many
    // consecutive degenerate pivots.
    std::size_t degenerate_streak = 50;
};

class SimplexSolver {
public:
    explicit SimplexSolver(const LinearProgram& lp, SimplexOptions options = {})
        : options_(options), objective_(lp.objective) {
        const std::size_t n = objective_.size();
        sign_.assign(n, 1.0);
        rhs_.resize(n);
        basis_.resize(n);
        tableau_.assign(n, {});
        for (std::size_t i = 0; i < n; ++i) {
            if (objective_[i] < 0.0) sign_[i] = -1.0;
            rhs_[i] = sign_[i] * objective_[i];
        }
        // Column layout grows as rows are added; slack and artificial columns
        // are created up front and new dual columns are appended at the end.
        for (std::size_t i = 0; i < n; ++i) {
            slack_col_.push_back(new_column(0.0, Column::Slack));
            set_entry(i, slack_col_[i], sign_[i]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (sign_[i] < 0.0) {
                std::size_t a = new_column(0.0, Column::Artificial);
                set_entry(i, a, 1.0);
                basis_[i] = a;
            } else {
                basis_[i] = slack_col_[i];
            }
        }
        for (const auto& row : lp.rows) append_row(row);
    }

    /// Adds a constraint; the next solve() resumes from the current basis.
    void add_row(const LpRow& row) { append_row(row); }

    std::size_t row_count() const { return rows_.size(); }
    const std::vector<LpRow>& rows() const { return rows_; }

    LpResult solve() {
        if (!phase_one_done_) {
            run_phase_one();
            phase_one_done_ = true;
        }
        iterate(false);

        LpResult result;
        result.pivots = pivots_;
        result.x.resize(objective_.size());
        const auto d = reduced_costs(false);
        for (std::size_t i = 0; i < objective_.size(); ++i)
            result.x[i] = std::max(0.0, d[slack_col_[i]]);
        for (std::size_t i = 0; i < objective_.size(); ++i)
            result.objective += objective_[i] * result.x[i];
        for (const auto& row : rows_) {
            double act = 0.0;
            for (const auto& t : row.terms) act += t.coef * result.x[t.var];
            const double v = (row.rhs - act) / (1.0 + std::abs(row.rhs));
            result.max_violation = std::max(result.max_violation, v);
        }
        return result;
    }

private:
    enum class Column { Dual, Slack, Artificial };

    std::size_t new_column(double cost, Column kind) {
        cost_.push_back(cost);
        kind_.push_back(kind);
        for (auto& r : tableau_) r.push_back(0.0);
        return cost_.size() - 1;
    }

    void set_entry(std::size_t row, std::size_t col, double v) { tableau_[row][col] = v; }

    void append_row(const LpRow& row) {
        for (const auto& t : row.terms)
            if (t.var >= objective_.size())
                throw std::out_of_range("LP row references unknown variable");
        rows_.push_back(row);
        // Dual variable y_r costs -b_r in the minimization form. Its tableau
        // column is B^-1 times the sign-adjusted original column, which is a
        // combination of the current slack columns.
        const std::size_t col = new_column(-row.rhs, Column::Dual);
        for (std::size_t i = 0; i < tableau_.size(); ++i) {
            double v = 0.0;
            for (const auto& t : row.terms) v += t.coef * tableau_[i][slack_col_[t.var]];
            tableau_[i][col] = v;
        }
    }

    double phase_cost(std::size_t col, bool phase_one) const {
        if (phase_one) return kind_[col] == Column::Artificial ? 1.0 : 0.0;
        return cost_[col];
    }

    std::vector<double> reduced_costs(bool phase_one) const {
        const std::size_t cols = cost_.size();
        std::vector<double> d(cols);
        for (std::size_t c = 0; c < cols; ++c) d[c] = phase_cost(c, phase_one);
        for (std::size_t i = 0; i < tableau_.size(); ++i) {
            const double cb = phase_cost(basis_[i], phase_one);
            if (cb == 0.0) continue;
            const auto& r = tableau_[i];
            for (std::size_t c = 0; c < cols; ++c) d[c] -= cb * r[c];
        }
        return d;
    }

    void pivot(std::size_t row, std::size_t col) {
        auto& pr = tableau_[row];
        const double inv = 1.0 / pr[col];
        for (double& v : pr) v *= inv;
        rhs_[row] *= inv;
        pr[col] = 1.0;
        for (std::size_t i = 0; i < tableau_.size(); ++i) {
            if (i == row) continue;
            auto& r = tableau_[i];
            const double f = r[col];
            if (f == 0.0) continue;
            for (std::size_t c = 0; c < r.size(); ++c) r[c] -= f * pr[c];
            r[col] = 0.0;
            rhs_[i] -= f * rhs_[row];
            if (rhs_[i] < 0.0 && rhs_[i] > -options_.tolerance) rhs_[i] = 0.0;
        }
        basis_[row] = col;
        ++pivots_;
    }

    void iterate(bool phase_one) {
        std::size_t streak = 0;
        for (;;) {
            if (pivots_ >= options_.max_pivots)
                throw LpError(LpError::Kind::IterationLimit,
                              "simplex pivot limit " + std::to_string(options_.max_pivots) +
                                  " reached");
            const auto d = reduced_costs(phase_one);
            const bool bland = streak >= options_.degenerate_streak;
            std::size_t enter = kNoColumn;
            double best = 0.0;
            for (std::size_t c = 0; c < d.size(); ++c) {
                if (!phase_one && kind_[c] == Column::Artificial) continue;
                const double threshold = -options_.tolerance * (1.0 + std::abs(cost_[c]));
                if (d[c] >= threshold) continue;
                if (bland) {
                    enter = c;
                    break;
                }
                if (d[c] < best) {
                    best = d[c];
                    enter = c;
                }
            }
            if (enter == kNoColumn) return;

            std::size_t leave = kNoColumn;
            double ratio = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < tableau_.size(); ++i) {
                const double a = tableau_[i][enter];
                if (a <= options_.tolerance) continue;
                const double q = rhs_[i] / a;
                const double slack = 1e-12 * (1.0 + std::abs(ratio));
                if (leave == kNoColumn || q < ratio - slack) {
                    ratio = q;
                    leave = i;
                } else if (q <= ratio + slack && basis_[i] < basis_[leave]) {
                    ratio = std::min(ratio, q);
                    leave = i;
                }
            }
            if (leave == kNoColumn) {
                // Dual unbounded along this ray: the primal rows are contradictory.
                throw LpError(LpError::Kind::Infeasible, "linear program is infeasible");
            }
            streak = ratio <= options_.tolerance ? streak + 1 : 0;
            pivot(leave, enter);
        }
    }

    void run_phase_one() {
        bool any_artificial = false;
        for (auto k : kind_) any_artificial |= (k == Column::Artificial);
        if (!any_artificial) return;
        iterate(true);
        double infeasibility = 0.0;
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (kind_[basis_[i]] == Column::Artificial) infeasibility += rhs_[i];
        if (infeasibility > options_.tolerance * (1.0 + static_cast<double>(basis_.size())))
            throw LpError(LpError::Kind::Unbounded, "linear program is unbounded");
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (kind_[basis_[i]] != Column::Artificial) continue;
            for (std::size_t c = 0; c < cost_.size(); ++c) {
                if (kind_[c] != Column::Artificial && std::abs(tableau_[i][c]) > options_.tolerance) {
                    pivot(i, c);
                    break;
                }
            }
        }
    }

    static constexpr std::size_t kNoColumn = std::numeric_limits<std::size_t>::max();

    SimplexOptions options_;
    std::vector<double> objective_;
    std::vector<LpRow> rows_;

    std::vector<double> sign_;
    std::vector<std::vector<double>> tableau_;
    std::vector<double> rhs_;
    std::vector<std::size_t> basis_;
    std::vector<double> cost_;
    std::vector<Column> kind_;
    std::vector<std::size_t> slack_col_;
    std::size_t pivots_ = 0;
    bool phase_one_done_ = false;
};

inline LpResult simplex_solve(const LinearProgram& lp, SimplexOptions options = {}) {
    SimplexSolver solver(lp, options);
    return solver.solve();
}

}  // namespace restore
