#pragma once

// Exact single-crew sequencing. With one crew the lines of an island are
// best repaired back to back, so each island acts as one composite job and
// the problem becomes single-machine weighted completion time under the
// island out-tree. That problem is solved by repeatedly merging the
// highest weight/processing composite into its parent.

#include <algorithm>
#include <queue>
#include <string_view>
#include <vector>

#include "restore/model.hpp"
#include "restore/schedule.hpp"

namespace restore {

/// An island, or a chain of islands already merged into one block.
struct CompositeJob {
    IslandIndex head = kNone;  // topmost island; also the tie-break id
    double weight = 0.0;
    double processing = 0.0;
    std::vector<IslandIndex> islands;  // sequence within the block
};

namespace detail {

// a strictly before b in the merge order: higher weight/processing first,
// zero processing counts as +inf, ties go to the smaller head id.
inline bool higher_ratio(double wa, double pa, IslandIndex ia, double wb, double pb,
                         IslandIndex ib) {
    const bool inf_a = pa <= 0.0;
    const bool inf_b = pb <= 0.0;
    if (inf_a != inf_b) return inf_a;
    if (!inf_a) {
        const double lhs = wa * pb;
        const double rhs = wb * pa;
        if (lhs != rhs) return lhs > rhs;
    }
    return ia < ib;
}

}  // namespace detail

/// Optimal island order for one crew; always a linear extension of the
/// precedence out-tree.
inline std::vector<IslandIndex> optimal_island_sequence(const IslandSet& islands,
                                                        const PrecedenceGraph& precedence) {
    const std::size_t k = islands.size();
    if (k == 0) return {};

    std::vector<double> weight(k), processing(k);
    std::vector<IslandIndex> next(k, kNone), tail(k);
    std::vector<unsigned> version(k, 0);
    std::vector<bool> merged(k, false);
    for (IslandIndex i = 0; i < k; ++i) {
        weight[i] = islands[i].weight;
        processing[i] = islands[i].processing;
        tail[i] = i;
    }

    // Composite membership: find(i) is the head of the block containing i.
    std::vector<IslandIndex> owner(k);
    for (IslandIndex i = 0; i < k; ++i) owner[i] = i;
    auto find = [&](IslandIndex i) {
        IslandIndex r = i;
        while (owner[r] != r) r = owner[r];
        while (owner[i] != r) {
            IslandIndex up = owner[i];
            owner[i] = r;
            i = up;
        }
        return r;
    };

    struct Entry {
        double w, p;
        IslandIndex id;
        unsigned version;
    };
    auto after = [](const Entry& a, const Entry& b) {
        return detail::higher_ratio(b.w, b.p, b.id, a.w, a.p, a.id);
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(after)> queue(after);
    for (IslandIndex i = 0; i < k; ++i)
        if (i != precedence.root) queue.push({weight[i], processing[i], i, 0});

    while (!queue.empty()) {
        Entry top = queue.top();
        queue.pop();
        if (merged[top.id] || top.version != version[top.id]) continue;

        const IslandIndex child = top.id;
        const IslandIndex parent = find(precedence.parent[child]);
        next[tail[parent]] = child;
        tail[parent] = tail[child];
        weight[parent] += weight[child];
        processing[parent] += processing[child];
        owner[child] = parent;
        merged[child] = true;

        if (parent != precedence.root) {
            ++version[parent];
            queue.push({weight[parent], processing[parent], parent, version[parent]});
        }
    }

    std::vector<IslandIndex> order;
    order.reserve(k);
    for (IslandIndex i = precedence.root; i != kNone; i = next[i]) order.push_back(i);
    return order;
}

enum class WithinIslandOrder {
    Given,                 // ascending line id
    Reversed,              // descending line id
    AdversarialLongestLast // ascending repair time, then id
};

inline std::string_view to_string(WithinIslandOrder order) {
    switch (order) {
    case WithinIslandOrder::Given: return "given";
    case WithinIslandOrder::Reversed: return "reversed";
    case WithinIslandOrder::AdversarialLongestLast: return "adversarial-longest-last";
    }
    return "given";
}

/// Concatenates each island's lines as one contiguous block.
inline std::vector<LineIndex> expand_sequence(std::span<const IslandIndex> island_order,
                                              const IslandSet& islands,
                                              std::span<const double> repair_times = {},
                                              WithinIslandOrder within = WithinIslandOrder::Given) {
    std::vector<LineIndex> list;
    list.reserve(islands.island_of_line.size());
    for (IslandIndex i : island_order) {
        std::vector<LineIndex> block = islands[i].lines;
        switch (within) {
        case WithinIslandOrder::Given: break;
        case WithinIslandOrder::Reversed: std::ranges::reverse(block); break;
        case WithinIslandOrder::AdversarialLongestLast:
            std::ranges::stable_sort(block, [&](LineIndex a, LineIndex b) {
                return repair_times[a] < repair_times[b];
            });
            break;
        }
        list.insert(list.end(), block.begin(), block.end());
    }
    return list;
}

struct SingleCrewResult {
    double harm = 0.0;                      // H^{1,*}
    std::vector<IslandIndex> island_order;
    std::vector<LineIndex> line_order;
    EnergizationVector energization;        // E^{1,*}
};

inline SingleCrewResult optimal_single_crew_harm(const Problem& problem) {
    SingleCrewResult out;
    out.island_order = optimal_island_sequence(problem.islands, problem.precedence);
    out.line_order = expand_sequence(out.island_order, problem.islands);
    const auto schedule = list_schedule(out.line_order, 1, problem.repair_times);
    out.energization = energization_times(schedule, problem.islands, problem.precedence);
    out.harm = harm(out.energization, problem.island_weights());
    return out;
}

}  // namespace restore
