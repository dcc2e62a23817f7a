#pragma once

// Damaged radial network model: validation, line weights, island partition
// and the group soft precedence out-tree between islands.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

#include "restore/error.hpp"

namespace restore {

using NodeIndex = std::size_t;
using LineIndex = std::size_t;
using IslandIndex = std::size_t;

inline constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct RawNode {
    std::string id;
    double weight = 0.0;
};

struct RawLine {
    std::string id;
    std::string from;
    std::string to;
    double repair_time = 0.0;
    bool is_switch = false;
};

/// Instance as read from file, before any checks. `roots` holds every root
/// id supplied so that a multi-root document can be reported as such.
struct RawInstance {
    std::vector<std::string> roots;
    int crews = 1;
    std::vector<RawNode> nodes;
    std::vector<RawLine> lines;
};

struct Node {
    std::string id;
    double weight = 0.0;

    bool operator==(const Node&) const = default;
};

/// A line oriented away from the root: `parent` is the upstream endpoint.
struct Line {
    std::string id;
    NodeIndex parent = kNone;
    NodeIndex child = kNone;
    double repair_time = 0.0;
    bool is_switch = false;

    bool operator==(const Line&) const = default;
};

/// Validated damaged tree. Nodes and lines are stored in ascending id order;
/// every index used elsewhere in the library refers into these vectors.
struct NetworkInstance {
    std::vector<Node> nodes;
    std::vector<Line> lines;
    NodeIndex root = kNone;
    int crews = 1;

    std::size_t line_count() const { return lines.size(); }

    std::vector<double> repair_times() const {
        std::vector<double> p(lines.size());
        std::ranges::transform(lines, p.begin(), &Line::repair_time);
        return p;
    }

    std::size_t switch_count() const {
        return static_cast<std::size_t>(std::ranges::count_if(lines, &Line::is_switch));
    }

    std::optional<LineIndex> find_line(const std::string& id) const {
        auto it = std::ranges::lower_bound(lines, id, {}, &Line::id);
        if (it == lines.end() || it->id != id) return std::nullopt;
        return static_cast<LineIndex>(it - lines.begin());
    }

    bool operator==(const NetworkInstance&) const = default;
};

struct Island {
    std::vector<LineIndex> lines;  // ascending
    std::vector<NodeIndex> nodes;  // ascending
    double weight = 0.0;           // sum of member line weights
    double processing = 0.0;       // sum of member repair times
};

struct IslandSet {
    std::vector<Island> islands;
    std::vector<IslandIndex> island_of_line;

    std::size_t size() const { return islands.size(); }
    const Island& operator[](IslandIndex i) const { return islands[i]; }

    /// Stable display name, ordered like the island indices.
    static std::string name(IslandIndex i) { return "J" + std::to_string(i); }
};

/// Out-tree over islands. Edge parent -> child means the child cannot be
/// energized before the parent.
struct PrecedenceGraph {
    IslandIndex root = 0;
    std::vector<IslandIndex> parent;                 // kNone for the root
    std::vector<std::vector<IslandIndex>> children;  // ascending
    std::vector<IslandIndex> topological_order;      // BFS from the root
    std::vector<std::size_t> depth;

    std::size_t size() const { return parent.size(); }

    std::size_t edge_count() const {
        return static_cast<std::size_t>(
            std::ranges::count_if(parent, [](IslandIndex p) { return p != kNone; }));
    }

    /// True when `ancestor` lies on the path from the root to `island`
    /// (each island precedes itself).
    bool precedes(IslandIndex ancestor, IslandIndex island) const {
        for (IslandIndex j = island; j != kNone; j = parent[j])
            if (j == ancestor) return true;
        return false;
    }
};

namespace detail {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<unsigned> rank_;
};

}  // namespace detail

/// Checks the tree assumptions and normalizes ids to dense sorted indices,
/// orienting every line away from the root.
inline NetworkInstance validate(const RawInstance& raw) {
    using Kind = ValidationError::Kind;

    if (raw.crews < 1) throw ValidationError(Kind::InvalidCrews, std::to_string(raw.crews));
    if (raw.roots.empty()) throw ValidationError(Kind::UnknownRoot, "<missing>");
    if (raw.roots.size() > 1) throw ValidationError(Kind::MultipleRoots, raw.roots[1]);

    NetworkInstance out;
    out.crews = raw.crews;

    std::vector<RawNode> nodes = raw.nodes;
    std::ranges::sort(nodes, {}, &RawNode::id);
    for (std::size_t i = 1; i < nodes.size(); ++i)
        if (nodes[i].id == nodes[i - 1].id) throw ValidationError(Kind::DuplicateId, nodes[i].id);

    std::vector<RawLine> lines = raw.lines;
    std::ranges::sort(lines, {}, &RawLine::id);
    for (std::size_t i = 1; i < lines.size(); ++i)
        if (lines[i].id == lines[i - 1].id) throw ValidationError(Kind::DuplicateId, lines[i].id);

    std::unordered_map<std::string, NodeIndex> node_index;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!(nodes[i].weight >= 0.0)) throw ValidationError(Kind::NegativeWeight, nodes[i].id);
        node_index.emplace(nodes[i].id, i);
        out.nodes.push_back({nodes[i].id, nodes[i].weight});
    }

    auto root_it = node_index.find(raw.roots.front());
    if (root_it == node_index.end()) throw ValidationError(Kind::UnknownRoot, raw.roots.front());
    out.root = root_it->second;

    if (std::ranges::none_of(nodes, [](const RawNode& n) { return n.weight > 0.0; }))
        throw ValidationError(Kind::NoPositiveWeight, "nodes");

    struct Edge {
        NodeIndex u, v;
    };
    std::vector<Edge> edges;
    for (const auto& l : lines) {
        if (!(l.repair_time >= 0.0)) throw ValidationError(Kind::NegativeRepairTime, l.id);
        auto u = node_index.find(l.from);
        if (u == node_index.end()) throw ValidationError(Kind::UnknownNode, l.from);
        auto v = node_index.find(l.to);
        if (v == node_index.end()) throw ValidationError(Kind::UnknownNode, l.to);
        edges.push_back({u->second, v->second});
    }

    detail::DisjointSets components(nodes.size());
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (!components.unite(edges[i].u, edges[i].v))
            throw ValidationError(Kind::CycleDetected, lines[i].id);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (components.find(i) != components.find(out.root))
            throw ValidationError(Kind::Disconnected, nodes[i].id);

    // Acyclic and connected: orient by BFS from the root.
    std::vector<std::vector<std::pair<NodeIndex, LineIndex>>> adjacency(nodes.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        adjacency[edges[i].u].emplace_back(edges[i].v, i);
        adjacency[edges[i].v].emplace_back(edges[i].u, i);
    }
    out.lines.resize(lines.size());
    std::vector<bool> seen(nodes.size(), false);
    std::queue<NodeIndex> frontier;
    frontier.push(out.root);
    seen[out.root] = true;
    while (!frontier.empty()) {
        NodeIndex u = frontier.front();
        frontier.pop();
        for (auto [v, li] : adjacency[u]) {
            if (seen[v]) continue;
            seen[v] = true;
            out.lines[li] = {lines[li].id, u, v, lines[li].repair_time, lines[li].is_switch};
            frontier.push(v);
        }
    }
    return out;
}

/// Moves every non-root node weight onto its parent line. The root is
/// always energized, so its weight is dropped.
inline std::vector<double> derive_line_weights(const NetworkInstance& instance) {
    std::vector<double> w(instance.lines.size());
    for (std::size_t j = 0; j < instance.lines.size(); ++j)
        w[j] = instance.nodes[instance.lines[j].child].weight;
    return w;
}

/// Connected components after deleting switch lines. A switch line joins
/// the island downstream of it. Islands are numbered by their smallest
/// member line; a root island without lines sorts first.
inline IslandSet partition_islands(const NetworkInstance& instance) {
    const std::size_t n_nodes = instance.nodes.size();
    detail::DisjointSets components(n_nodes);
    for (const auto& line : instance.lines)
        if (!line.is_switch) components.unite(line.parent, line.child);

    std::vector<std::size_t> rep_to_slot(n_nodes, kNone);
    std::vector<std::vector<NodeIndex>> members;
    for (NodeIndex v = 0; v < n_nodes; ++v) {
        std::size_t rep = components.find(v);
        if (rep_to_slot[rep] == kNone) {
            rep_to_slot[rep] = members.size();
            members.emplace_back();
        }
        members[rep_to_slot[rep]].push_back(v);
    }

    std::vector<std::vector<LineIndex>> slot_lines(members.size());
    for (LineIndex j = 0; j < instance.lines.size(); ++j) {
        // Either endpoint for ordinary lines; the child for switches.
        slot_lines[rep_to_slot[components.find(instance.lines[j].child)]].push_back(j);
    }

    std::vector<std::size_t> order(members.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto key = [&](std::size_t s) {
        return slot_lines[s].empty() ? std::size_t{0} : slot_lines[s].front() + 1;
    };
    std::ranges::sort(order, {}, key);

    const auto weights = derive_line_weights(instance);
    IslandSet out;
    out.island_of_line.assign(instance.lines.size(), kNone);
    for (std::size_t s : order) {
        Island island;
        island.lines = std::move(slot_lines[s]);
        island.nodes = std::move(members[s]);
        for (LineIndex j : island.lines) {
            island.weight += weights[j];
            island.processing += instance.lines[j].repair_time;
            out.island_of_line[j] = out.islands.size();
        }
        out.islands.push_back(std::move(island));
    }
    return out;
}

/// Contracts each island to a vertex; every switch line becomes an edge
/// from the island holding its upstream endpoint to the island it feeds.
inline PrecedenceGraph build_precedence_graph(const NetworkInstance& instance,
                                              const IslandSet& islands) {
    const std::size_t k = islands.size();
    std::vector<IslandIndex> island_of_node(instance.nodes.size(), kNone);
    for (IslandIndex i = 0; i < k; ++i)
        for (NodeIndex v : islands[i].nodes) island_of_node[v] = i;

    PrecedenceGraph graph;
    graph.parent.assign(k, kNone);
    graph.children.assign(k, {});
    graph.depth.assign(k, 0);
    graph.root = island_of_node[instance.root];

    for (const auto& line : instance.lines) {
        if (!line.is_switch) continue;
        IslandIndex up = island_of_node[line.parent];
        IslandIndex down = island_of_node[line.child];
        graph.parent[down] = up;
        graph.children[up].push_back(down);
    }
    for (auto& c : graph.children) std::ranges::sort(c);

    std::queue<IslandIndex> frontier;
    frontier.push(graph.root);
    while (!frontier.empty()) {
        IslandIndex i = frontier.front();
        frontier.pop();
        graph.topological_order.push_back(i);
        for (IslandIndex c : graph.children[i]) {
            graph.depth[c] = graph.depth[i] + 1;
            frontier.push(c);
        }
    }
    return graph;
}

/// Everything the schedulers need, derived once from a validated instance.
struct Problem {
    NetworkInstance instance;
    std::vector<double> repair_times;
    std::vector<double> line_weights;
    IslandSet islands;
    PrecedenceGraph precedence;

    explicit Problem(NetworkInstance inst)
        : instance(std::move(inst)),
          repair_times(instance.repair_times()),
          line_weights(derive_line_weights(instance)),
          islands(partition_islands(instance)),
          precedence(build_precedence_graph(instance, islands)) {}

    std::size_t line_count() const { return instance.lines.size(); }

    std::vector<double> island_weights() const {
        std::vector<double> w(islands.size());
        std::ranges::transform(islands.islands, w.begin(), &Island::weight);
        return w;
    }
};

}  // namespace restore
