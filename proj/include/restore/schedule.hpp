#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "restore/error.hpp"
#include "restore/model.hpp"

namespace restore {

struct Assignment {
    LineIndex line = kNone;
    double start = 0.0;
    double completion = 0.0;
};

/// Per-crew job sequences. Crews work back to back from time zero.
struct Schedule {
    int crews = 1;
    std::vector<std::vector<Assignment>> assignments;

    std::size_t job_count() const {
        std::size_t n = 0;
        for (const auto& c : assignments) n += c.size();
        return n;
    }

    /// Completion time indexed by line; requires every line to be present.
    std::vector<double> completion_times(std::size_t line_count) const {
        std::vector<double> c(line_count, 0.0);
        for (const auto& crew : assignments)
            for (const auto& a : crew) c[a.line] = a.completion;
        return c;
    }

    std::vector<double> start_times(std::size_t line_count) const {
        std::vector<double> s(line_count, 0.0);
        for (const auto& crew : assignments)
            for (const auto& a : crew) s[a.line] = a.start;
        return s;
    }

    double makespan() const {
        double t = 0.0;
        for (const auto& crew : assignments)
            if (!crew.empty()) t = std::max(t, crew.back().completion);
        return t;
    }
};

using EnergizationVector = std::vector<double>;  // indexed by island

struct IslandHarm {
    double weight = 0.0;
    double energization = 0.0;
};

struct HarmReport {
    std::string algorithm;
    double harm = 0.0;
    std::vector<IslandHarm> islands;
    std::optional<double> single_crew_optimum;    // H^{1,*}
    std::optional<double> infinite_crew_optimum;  // H^{inf,*}
};

/// Greedy list scheduling: whenever a crew is free it takes the next line of
/// `priority`. Simultaneously free crews are served lowest index first.
inline Schedule list_schedule(std::span<const LineIndex> priority, int crews,
                              std::span<const double> repair_times) {
    if (crews < 1) throw std::invalid_argument("list_schedule: crews must be >= 1");
    const std::size_t n = repair_times.size();
    if (priority.size() != n)
        throw ListNotPermutation("priority list has " + std::to_string(priority.size()) +
                                 " entries for " + std::to_string(n) + " lines");
    std::vector<bool> seen(n, false);
    for (LineIndex j : priority) {
        if (j >= n || seen[j])
            throw ListNotPermutation("priority list entry " + std::to_string(j) +
                                     " is out of range or repeated");
        seen[j] = true;
    }

    Schedule schedule;
    schedule.crews = crews;
    schedule.assignments.resize(static_cast<std::size_t>(crews));

    using Slot = std::pair<double, std::size_t>;  // (free at, crew)
    std::priority_queue<Slot, std::vector<Slot>, std::greater<>> free_crews;
    for (std::size_t k = 0; k < schedule.assignments.size(); ++k) free_crews.emplace(0.0, k);

    for (LineIndex j : priority) {
        auto [t, k] = free_crews.top();
        free_crews.pop();
        const double done = t + repair_times[j];
        schedule.assignments[k].push_back({j, t, done});
        free_crews.emplace(done, k);
    }
    return schedule;
}

/// E_J = max(latest completion inside J, E of J's parent), evaluated
/// top-down; equal to the max over all upstream islands' completions.
inline EnergizationVector energization_times(std::span<const double> completion,
                                             const IslandSet& islands,
                                             const PrecedenceGraph& precedence) {
    EnergizationVector e(islands.size(), 0.0);
    for (IslandIndex i : precedence.topological_order) {
        double t = 0.0;
        for (LineIndex j : islands[i].lines) t = std::max(t, completion[j]);
        if (precedence.parent[i] != kNone) t = std::max(t, e[precedence.parent[i]]);
        e[i] = t;
    }
    return e;
}

inline EnergizationVector energization_times(const Schedule& schedule, const IslandSet& islands,
                                             const PrecedenceGraph& precedence) {
    const auto c = schedule.completion_times(islands.island_of_line.size());
    return energization_times(c, islands, precedence);
}

inline double harm(std::span<const double> energization, std::span<const double> island_weights) {
    double h = 0.0;
    for (std::size_t i = 0; i < energization.size(); ++i) h += island_weights[i] * energization[i];
    return h;
}

inline HarmReport make_harm_report(std::string algorithm, std::span<const double> energization,
                                   const IslandSet& islands) {
    HarmReport report;
    report.algorithm = std::move(algorithm);
    for (IslandIndex i = 0; i < islands.size(); ++i) {
        report.islands.push_back({islands[i].weight, energization[i]});
        report.harm += islands[i].weight * energization[i];
    }
    return report;
}

struct InfiniteCrewResult {
    EnergizationVector energization;
    double harm = 0.0;
};

/// With a crew per line every job finishes at p_j, so each island waits for
/// the longest repair on its path from the source.
inline InfiniteCrewResult infinite_crew_energization(const IslandSet& islands,
                                                     const PrecedenceGraph& precedence,
                                                     std::span<const double> repair_times) {
    InfiniteCrewResult out;
    out.energization = energization_times(repair_times, islands, precedence);
    for (IslandIndex i = 0; i < islands.size(); ++i)
        out.harm += islands[i].weight * out.energization[i];
    return out;
}

inline InfiniteCrewResult infinite_crew_energization(const Problem& problem) {
    return infinite_crew_energization(problem.islands, problem.precedence, problem.repair_times);
}

/// Harm of list-scheduling `priority` on `crews` crews.
inline double list_schedule_harm(const Problem& problem, std::span<const LineIndex> priority,
                                 int crews) {
    const auto s = list_schedule(priority, crews, problem.repair_times);
    const auto e = energization_times(s, problem.islands, problem.precedence);
    return harm(e, problem.island_weights());
}

}  // namespace restore
