#pragma once

// LP relaxation over completion times C_j and island energization times E_J:
//
//   minimize   sum_J w_J E_J
//   subject to C_j >= p_j,  E_J >= C_j (j in J),  E_J >= E_parent(J),
//              sum_{j in A} p_j C_j >= f(A) for every line subset A,
//
// with f(A) = (sum_A p)^2 / 2m + (sum_A p^2) / 2. The subset family is
// exponential, so it is generated lazily by a cutting-plane loop.

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "restore/error.hpp"
#include "restore/model.hpp"
#include "restore/simplex.hpp"

namespace restore {

inline constexpr double kCutTolerance = 1e-7;
inline constexpr double kLpTolerance = 1e-9;

struct Cut {
    std::vector<LineIndex> lines;  // ascending
    double rhs = 0.0;
};

/// f(A) for the parallel-machine valid inequality.
inline double cut_rhs(std::span<const LineIndex> subset, std::span<const double> p, int crews) {
    double sum = 0.0, sum_sq = 0.0;
    for (LineIndex j : subset) {
        sum += p[j];
        sum_sq += p[j] * p[j];
    }
    return sum * sum / (2.0 * crews) + 0.5 * sum_sq;
}

inline double cut_violation(std::span<const LineIndex> subset, std::span<const double> completion,
                            std::span<const double> p, int crews) {
    double lhs = 0.0;
    for (LineIndex j : subset) lhs += p[j] * completion[j];
    return cut_rhs(subset, p, crews) - lhs;
}

struct SeparationResult {
    std::vector<LineIndex> lines;  // ascending
    double violation = 0.0;
};

/// Best prefix of the lines with p_j > 0 ordered by ascending midpoint
/// C_j - p_j/2 (ties by index). The most violated inequality is always such
/// a prefix: a line j sits in a maximizer only if its midpoint is at most
/// P(A)/m - p_j/2m, and outside only if it is at least P(A)/m + p_j/2m.
/// When nothing is violated the empty set (violation 0) is returned.
inline SeparationResult max_prefix_violation(std::span<const double> completion,
                                             std::span<const double> p, int crews) {
    std::vector<LineIndex> order;
    for (LineIndex j = 0; j < p.size(); ++j)
        if (p[j] > 0.0) order.push_back(j);
    std::ranges::stable_sort(order, [&](LineIndex a, LineIndex b) {
        return completion[a] - p[a] / 2.0 < completion[b] - p[b] / 2.0;
    });

    // The empty set (violation 0) competes too, so a clean point reports 0.
    SeparationResult best;
    double sum = 0.0, sum_sq = 0.0, lhs = 0.0;
    std::size_t best_len = 0;
    double best_violation = 0.0;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const LineIndex j = order[k];
        sum += p[j];
        sum_sq += p[j] * p[j];
        lhs += p[j] * completion[j];
        const double v = sum * sum / (2.0 * crews) + 0.5 * sum_sq - lhs;
        if (v > best_violation) {
            best_violation = v;
            best_len = k + 1;
        }
    }
    best.lines.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(best_len));
    std::ranges::sort(best.lines);
    best.violation = best_violation;
    return best;
}

/// Most violated valid inequality, or nothing when every violation is
/// within `tolerance`.
inline std::optional<SeparationResult> separate(std::span<const double> completion,
                                                std::span<const double> p, int crews,
                                                double tolerance = kCutTolerance) {
    auto best = max_prefix_violation(completion, p, crews);
    if (best.lines.empty() || best.violation <= tolerance) return std::nullopt;
    return best;
}

struct LpSolution {
    std::vector<double> completion;    // C^LP per line
    std::vector<double> energization;  // E^LP per island
    std::vector<double> midpoints;     // M^LP per line
    double objective = 0.0;            // H^LP
    std::size_t iterations = 0;        // LP solves
    std::size_t pivots = 0;
    std::vector<Cut> cuts;             // every pooled cut, singletons included
    std::vector<double> objective_trace;  // objective after each solve
    LinearProgram model;               // final model, for auditing
};

/// Variables: C_j at index j, E_J at index n + J.
inline LinearProgram build_base_model(const Problem& problem) {
    const std::size_t n = problem.line_count();
    const std::size_t k = problem.islands.size();
    const auto& p = problem.repair_times;

    LinearProgram lp;
    lp.objective.assign(n + k, 0.0);
    for (IslandIndex i = 0; i < k; ++i) lp.objective[n + i] = problem.islands[i].weight;
    for (LineIndex j = 0; j < n; ++j) lp.names.push_back("C[" + problem.instance.lines[j].id + "]");
    for (IslandIndex i = 0; i < k; ++i) lp.names.push_back("E[" + IslandSet::name(i) + "]");

    for (LineIndex j = 0; j < n; ++j)
        lp.rows.push_back({{{j, 1.0}}, p[j], "repair"});
    for (IslandIndex i = 0; i < k; ++i)
        for (LineIndex j : problem.islands[i].lines)
            lp.rows.push_back({{{n + i, 1.0}, {j, -1.0}}, 0.0, "island"});
    for (IslandIndex i = 0; i < k; ++i)
        if (problem.precedence.parent[i] != kNone)
            lp.rows.push_back(
                {{{n + i, 1.0}, {n + problem.precedence.parent[i], -1.0}}, 0.0, "precedence"});
    return lp;
}

inline LpRow cut_row(const Cut& cut, std::span<const double> p) {
    LpRow row;
    row.rhs = cut.rhs;
    row.label = "cut";
    for (LineIndex j : cut.lines) row.terms.push_back({j, p[j]});
    return row;
}

/// Cutting-plane solve of the relaxation. Starts from the base constraints
/// plus every singleton cut and adds the most violated prefix cut until
/// separation comes back clean.
inline LpSolution solve_relaxation(const Problem& problem, int crews) {
    if (crews < 1) throw std::invalid_argument("solve_relaxation: crews must be >= 1");
    const std::size_t n = problem.line_count();
    const auto& p = problem.repair_times;

    LpSolution sol;
    sol.model = build_base_model(problem);
    for (LineIndex j = 0; j < n; ++j) {
        if (p[j] <= 0.0) continue;
        Cut c{{j}, cut_rhs(std::vector<LineIndex>{j}, p, crews)};
        sol.model.rows.push_back(cut_row(c, p));
        sol.cuts.push_back(std::move(c));
    }

    std::size_t positive = 0;
    for (double v : p) positive += v > 0.0 ? 1 : 0;
    const std::size_t cut_limit = std::max<std::size_t>(10 * positive * positive, 10);

    std::set<std::vector<LineIndex>> pooled;
    for (const auto& c : sol.cuts) pooled.insert(c.lines);

    SimplexSolver solver(sol.model);
    double last_violation = 0.0;
    std::size_t added = 0;
    for (;;) {
        const LpResult r = solver.solve();
        ++sol.iterations;
        sol.pivots = r.pivots;
        sol.objective = r.objective;
        sol.objective_trace.push_back(r.objective);
        sol.completion.assign(r.x.begin(), r.x.begin() + static_cast<std::ptrdiff_t>(n));
        sol.energization.assign(r.x.begin() + static_cast<std::ptrdiff_t>(n), r.x.end());

        auto violated = separate(sol.completion, p, crews);
        if (!violated) break;
        // A pooled cut can only reappear through round-off in the solver.
        if (!pooled.insert(violated->lines).second) break;
        last_violation = violated->violation;
        if (added >= cut_limit) {
            std::ostringstream msg;
            msg << "cutting-plane limit of " << cut_limit << " cuts reached; last violation "
                << last_violation << ", pooled cuts " << sol.cuts.size();
            throw LpError(LpError::Kind::IterationLimit, msg.str());
        }
        Cut c{std::move(violated->lines), 0.0};
        c.rhs = cut_rhs(c.lines, p, crews);
        LpRow row = cut_row(c, p);
        solver.add_row(row);
        sol.model.rows.push_back(std::move(row));
        sol.cuts.push_back(std::move(c));
        ++added;
    }

    sol.midpoints.resize(n);
    for (LineIndex j = 0; j < n; ++j) sol.midpoints[j] = sol.completion[j] - p[j] / 2.0;
    return sol;
}

/// M_j = C_j - p_j/2. Also checks the midpoint form of every pooled cut,
/// sum_A p_j M_j >= (sum_A p)^2 / 2m.
inline std::vector<double> lp_midpoints(const LpSolution& solution, std::span<const double> p,
                                        int crews) {
    std::vector<double> m(p.size());
    for (LineIndex j = 0; j < p.size(); ++j) m[j] = solution.completion[j] - p[j] / 2.0;
    for (const auto& cut : solution.cuts) {
        double lhs = 0.0, sum = 0.0;
        for (LineIndex j : cut.lines) {
            lhs += p[j] * m[j];
            sum += p[j];
        }
        const double rhs = sum * sum / (2.0 * crews);
        if (lhs < rhs - 1e-6 * (1.0 + std::abs(rhs)))
            throw InvariantViolation("midpoint inequality fails on a pooled cut");
    }
    return m;
}

/// Plain-text audit dump: objective, every row as an inequality, then the
/// solution values.
inline void dump_lp(std::ostream& out, const LpSolution& solution) {
    const auto& lp = solution.model;
    auto term = [&](double coef, std::size_t var, bool first) {
        std::ostringstream s;
        if (!first) s << (coef < 0 ? " - " : " + ");
        else if (coef < 0) s << "-";
        const double a = std::abs(coef);
        if (a != 1.0) s << std::setprecision(12) << a << " ";
        s << lp.names[var];
        return s.str();
    };
    out << std::setprecision(12);
    out << "minimize:";
    bool first = true;
    for (std::size_t v = 0; v < lp.objective.size(); ++v) {
        if (lp.objective[v] == 0.0) continue;
        out << (first ? " " : "") << term(lp.objective[v], v, first);
        first = false;
    }
    if (first) out << " 0";
    out << "\nsubject to:\n";
    std::size_t cut_no = 0;
    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
        const auto& row = lp.rows[r];
        if (row.label == "cut") out << "  cut" << cut_no++ << ": ";
        else out << "  " << row.label << r << ": ";
        for (std::size_t t = 0; t < row.terms.size(); ++t)
            out << term(row.terms[t].coef, row.terms[t].var, t == 0);
        out << " >= " << row.rhs << "\n";
    }
    out << "solution: objective " << solution.objective << " after " << solution.iterations
        << " solves, " << solution.cuts.size() << " cuts\n";
    for (std::size_t v = 0; v < lp.names.size(); ++v) {
        const double x = v < solution.completion.size()
                             ? solution.completion[v]
                             : solution.energization[v - solution.completion.size()];
        out << "  " << lp.names[v] << " = " << x << "\n";
    }
}

}  // namespace restore
