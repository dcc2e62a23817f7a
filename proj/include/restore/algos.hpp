#pragma once

// The two approximation schedulers.
//
//  * lp_list_schedule: list scheduling in ascending order of LP midpoints.
//    Every job finishes by twice its LP completion time, so H <= 2 H^{m,*}.
//  * convert_single_to_m: list scheduling of the optimal one-crew sequence.
//    Every island is energized by E^1/m + (m-1)/m E^inf, so
//    H <= (2 - 1/m) H^{m,*}.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "restore/lp.hpp"
#include "restore/model.hpp"
#include "restore/schedule.hpp"
#include "restore/seq_opt.hpp"

namespace restore {

inline constexpr std::string_view kAlgLpList = "lp-list";
inline constexpr std::string_view kAlgConvert = "convert";
inline constexpr std::string_view kAlgSingleOptimal = "single-optimal";

struct AlgoResult {
    std::string algorithm;
    Schedule schedule;
    EnergizationVector energization;
    HarmReport report;
    std::vector<LineIndex> priority;
    std::optional<LpSolution> lp;                 // lp-list only
    std::optional<SingleCrewResult> single_crew;  // convert / single-optimal
};

namespace detail {

inline AlgoResult finish(const Problem& problem, std::string tag, std::vector<LineIndex> priority,
                         int crews) {
    AlgoResult r;
    r.algorithm = std::move(tag);
    r.priority = std::move(priority);
    r.schedule = list_schedule(r.priority, crews, problem.repair_times);
    r.energization = energization_times(r.schedule, problem.islands, problem.precedence);
    r.report = make_harm_report(r.algorithm, r.energization, problem.islands);
    r.report.infinite_crew_optimum = infinite_crew_energization(problem).harm;
    return r;
}

// Midpoints equal up to LP round-off compare equal.
inline std::int64_t midpoint_key(double m) { return std::llround(m / kLpTolerance); }

}  // namespace detail

/// Priority list by ascending midpoint; ties go to the shallower island in
/// the precedence tree, then to the smaller line index.
inline std::vector<LineIndex> midpoint_priority(const Problem& problem,
                                                const std::vector<double>& midpoints) {
    std::vector<LineIndex> list(problem.line_count());
    std::iota(list.begin(), list.end(), LineIndex{0});
    std::ranges::sort(list, [&](LineIndex a, LineIndex b) {
        const auto ka = detail::midpoint_key(midpoints[a]);
        const auto kb = detail::midpoint_key(midpoints[b]);
        if (ka != kb) return ka < kb;
        const auto da = problem.precedence.depth[problem.islands.island_of_line[a]];
        const auto db = problem.precedence.depth[problem.islands.island_of_line[b]];
        if (da != db) return da < db;
        return a < b;
    });
    return list;
}

inline AlgoResult lp_list_schedule(const Problem& problem, int crews) {
    LpSolution lp = solve_relaxation(problem, crews);
    lp.midpoints = lp_midpoints(lp, problem.repair_times, crews);
    auto r = detail::finish(problem, std::string(kAlgLpList), midpoint_priority(problem, lp.midpoints),
                            crews);
    r.lp = std::move(lp);
    return r;
}

inline AlgoResult convert_single_to_m(const Problem& problem, int crews,
                                      WithinIslandOrder within = WithinIslandOrder::Given) {
    SingleCrewResult single = optimal_single_crew_harm(problem);
    auto list = expand_sequence(single.island_order, problem.islands, problem.repair_times, within);
    auto r = detail::finish(problem, std::string(kAlgConvert), std::move(list), crews);
    r.report.single_crew_optimum = single.harm;
    r.single_crew = std::move(single);
    return r;
}

/// The optimal one-crew sequence, scheduled on one crew regardless of the
/// instance's crew count.
inline AlgoResult single_optimal(const Problem& problem) {
    SingleCrewResult single = optimal_single_crew_harm(problem);
    auto r = detail::finish(problem, std::string(kAlgSingleOptimal), single.line_order, 1);
    r.report.single_crew_optimum = single.harm;
    r.single_crew = std::move(single);
    return r;
}

/// Upper bound on E^m_J for the converted schedule:
/// E^1_J / m + (m-1)/m * E^inf_J.
inline std::vector<double> conversion_bounds(const Problem& problem, int crews) {
    const auto single = optimal_single_crew_harm(problem);
    const auto inf = infinite_crew_energization(problem);
    std::vector<double> bound(problem.islands.size());
    const double m = crews;
    for (IslandIndex i = 0; i < bound.size(); ++i)
        bound[i] = single.energization[i] / m + (m - 1.0) / m * inf.energization[i];
    return bound;
}

}  // namespace restore
