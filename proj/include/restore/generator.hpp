#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "restore/model.hpp"

namespace restore {

struct GenParams {
    std::uint64_t seed = 1;
    std::size_t min_nodes = 2;
    std::size_t max_nodes = 9;
    double switch_probability = 0.4;
    int repair_min = 1;
    int repair_max = 5;
    int weight_min = 1;
    int weight_max = 10;
    std::vector<int> crews = {2, 3};
};

namespace detail {

// Platform-independent draws: std::mt19937_64 output is fixed by the
// standard, the std distributions are not.
class PortableRng {
public:
    explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
        if (range == 0) return static_cast<std::int64_t>(engine_());
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % range;
        std::uint64_t x;
        do x = engine_();
        while (x >= limit);
        return lo + static_cast<std::int64_t>(x % range);
    }

    bool bernoulli(double p) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return u < p;
    }

private:
    std::mt19937_64 engine_;
};

inline std::string padded(char prefix, std::size_t value, std::size_t width) {
    std::string digits = std::to_string(value);
    if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
    return prefix + digits;
}

}  // namespace detail

/// Stream seed for the k-th instance of a batch.
inline std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t k) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (k + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Random damaged tree: node i attaches to a uniformly chosen earlier node,
/// every line is a switch with the given probability, and repair times and
/// weights are uniform integers. The root carries weight 0.
inline RawInstance generate_raw(const GenParams& params) {
    detail::PortableRng rng(params.seed);
    const auto nodes = static_cast<std::size_t>(
        rng.uniform(static_cast<std::int64_t>(std::max<std::size_t>(params.min_nodes, 2)),
                    static_cast<std::int64_t>(std::max(params.max_nodes, params.min_nodes))));
    const std::size_t width = std::to_string(nodes).size();

    RawInstance raw;
    raw.crews = params.crews.empty() ? 1 : params.crews.front();
    raw.roots.push_back(detail::padded('n', 0, width));
    raw.nodes.push_back({raw.roots.front(), 0.0});
    bool any_weight = false;
    for (std::size_t i = 1; i < nodes; ++i) {
        const auto parent = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1));
        RawLine line;
        line.id = detail::padded('L', i, width);
        line.from = detail::padded('n', parent, width);
        line.to = detail::padded('n', i, width);
        line.is_switch = rng.bernoulli(params.switch_probability);
        line.repair_time = static_cast<double>(rng.uniform(params.repair_min, params.repair_max));
        const double w = static_cast<double>(rng.uniform(params.weight_min, params.weight_max));
        any_weight |= w > 0.0;
        raw.nodes.push_back({detail::padded('n', i, width), w});
        raw.lines.push_back(std::move(line));
    }
    if (!any_weight) raw.nodes.back().weight = 1.0;
    return raw;
}

inline NetworkInstance generate_random(const GenParams& params) {
    return validate(generate_raw(params));
}

}  // namespace restore
