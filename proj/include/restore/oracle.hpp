#pragma once

// Brute-force references used to certify the fast algorithms on small
// instances. With zero release dates and no hard precedence some no-idle
// list schedule is optimal, so enumerating priority lists is complete.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "restore/error.hpp"
#include "restore/lp.hpp"
#include "restore/model.hpp"
#include "restore/schedule.hpp"
#include "restore/seq_opt.hpp"

namespace restore {

inline constexpr std::size_t kOracleMaxLines = 9;
inline constexpr std::size_t kExhaustiveSeparationMax = 12;

struct OracleResult {
    double harm = std::numeric_limits<double>::infinity();  // H^{m,*}
    std::vector<LineIndex> best_list;  // lexicographically smallest optimum
    std::size_t lists_enumerated = 0;
};

inline OracleResult brute_force_optimal(const Problem& problem, int crews) {
    const std::size_t n = problem.line_count();
    if (n > kOracleMaxLines) throw TooLarge("brute-force enumeration", n, kOracleMaxLines);
    if (crews < 1) throw std::invalid_argument("brute_force_optimal: crews must be >= 1");

    const auto weights = problem.island_weights();
    const auto& p = problem.repair_times;
    std::vector<LineIndex> list(n);
    std::iota(list.begin(), list.end(), LineIndex{0});

    // Inline list scheduling; the crew count is tiny so a linear scan for the
    // earliest free crew beats a heap.
    std::vector<double> free_at(static_cast<std::size_t>(crews));
    std::vector<double> completion(n);
    OracleResult best;
    do {
        std::ranges::fill(free_at, 0.0);
        for (LineIndex j : list) {
            std::size_t k = 0;
            for (std::size_t c = 1; c < free_at.size(); ++c)
                if (free_at[c] < free_at[k]) k = c;
            free_at[k] += p[j];
            completion[j] = free_at[k];
        }
        const auto e = energization_times(completion, problem.islands, problem.precedence);
        const double h = harm(e, weights);
        ++best.lists_enumerated;
        if (h < best.harm) {
            best.harm = h;
            best.best_list = list;
        }
    } while (std::next_permutation(list.begin(), list.end()));
    if (n == 0) best.harm = 0.0;
    return best;
}

struct BoundReport {
    int crews = 1;
    double single_crew = 0.0;    // H^{1,*}
    double infinite_crew = 0.0;  // H^{inf,*}
    double optimum = 0.0;        // H^{m,*}
    double single_slack = 0.0;   // H^{m,*} - H^{1,*}/m
    double infinite_slack = 0.0; // H^{m,*} - H^{inf,*}
};

/// Lower bounds on the m-crew optimum: H^{m,*} >= H^{1,*}/m and
/// H^{m,*} >= H^{inf,*}. Throws InvariantViolation if either fails.
inline BoundReport check_bounds(const Problem& problem, int crews, double tolerance = 1e-9) {
    BoundReport r;
    r.crews = crews;
    r.single_crew = optimal_single_crew_harm(problem).harm;
    r.infinite_crew = infinite_crew_energization(problem).harm;
    r.optimum = brute_force_optimal(problem, crews).harm;
    r.single_slack = r.optimum - r.single_crew / crews;
    r.infinite_slack = r.optimum - r.infinite_crew;
    const double tol = tolerance * (1.0 + std::abs(r.optimum));
    if (r.single_slack < -tol)
        throw InvariantViolation("BoundViolated: H^{m,*} = " + std::to_string(r.optimum) +
                                 " < H^{1,*}/m = " + std::to_string(r.single_crew / crews));
    if (r.infinite_slack < -tol)
        throw InvariantViolation("BoundViolated: H^{m,*} = " + std::to_string(r.optimum) +
                                 " < H^{inf,*} = " + std::to_string(r.infinite_crew));
    return r;
}

/// Exact maximizer of f(A) - sum_A p_j C_j over all subsets, the empty one
/// (violation 0) included.
inline SeparationResult exhaustive_separation(std::span<const double> completion,
                                              std::span<const double> p, int crews) {
    const std::size_t n = p.size();
    if (n > kExhaustiveSeparationMax)
        throw TooLarge("exhaustive separation", n, kExhaustiveSeparationMax);
    SeparationResult best;  // empty set, violation 0
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        double sum = 0.0, sum_sq = 0.0, lhs = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            sum += p[j];
            sum_sq += p[j] * p[j];
            lhs += p[j] * completion[j];
        }
        const double v = sum * sum / (2.0 * crews) + 0.5 * sum_sq - lhs;
        if (v > best.violation) {
            best.violation = v;
            best.lines.clear();
            for (std::size_t j = 0; j < n; ++j)
                if (mask & (1u << j)) best.lines.push_back(j);
        }
    }
    return best;
}

}  // namespace restore
