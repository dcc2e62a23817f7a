#pragma once

// JSON instance and result files.
//
// Instance: {"root": id, "crews": m,
//            "nodes": [{"id", "weight"}],
//            "lines": [{"id", "from", "to", "repair_time", "switch"}]}
// Ids may be strings or integers; integers are read as their decimal text.

#include <cstddef>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>

#include "json.hpp"
#include "restore/algos.hpp"
#include "restore/error.hpp"
#include "restore/model.hpp"

namespace restore {

using Json = nlohmann::json;

namespace detail {

inline void reject_unknown(const Json& obj, std::initializer_list<std::string_view> allowed,
                           const std::string& where) {
    for (const auto& [key, _] : obj.items()) {
        bool known = false;
        for (auto a : allowed) known |= (key == a);
        if (!known) throw SchemaError(key, "unknown field in " + where);
    }
}

inline const Json& require(const Json& obj, const char* field, const std::string& where) {
    auto it = obj.find(field);
    if (it == obj.end()) throw SchemaError(field, "missing in " + where);
    return *it;
}

inline std::string read_id(const Json& v, const char* field) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
    throw SchemaError(field, "expected a string or integer id");
}

inline double read_number(const Json& v, const char* field) {
    if (!v.is_number()) throw SchemaError(field, "expected a number");
    return v.get<double>();
}

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace detail

inline Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        // nlohmann reports the byte count read, one past the offending byte.
        auto [line, col] = detail::line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(e.what(), line, col);
    }
}

inline RawInstance raw_instance_from_json(const Json& doc) {
    if (!doc.is_object()) throw SchemaError("<document>", "expected an object");
    detail::reject_unknown(doc, {"root", "crews", "nodes", "lines"}, "instance");

    RawInstance raw;
    const Json& root = detail::require(doc, "root", "instance");
    if (root.is_array()) {
        for (const auto& r : root) raw.roots.push_back(detail::read_id(r, "root"));
    } else {
        raw.roots.push_back(detail::read_id(root, "root"));
    }
    const Json& crews = detail::require(doc, "crews", "instance");
    if (!crews.is_number_integer()) throw SchemaError("crews", "expected an integer");
    raw.crews = crews.get<int>();

    const Json& nodes = detail::require(doc, "nodes", "instance");
    if (!nodes.is_array()) throw SchemaError("nodes", "expected an array");
    for (const auto& n : nodes) {
        if (!n.is_object()) throw SchemaError("nodes", "expected objects");
        detail::reject_unknown(n, {"id", "weight"}, "node");
        raw.nodes.push_back({detail::read_id(detail::require(n, "id", "node"), "id"),
                             detail::read_number(detail::require(n, "weight", "node"), "weight")});
    }

    const Json& lines = detail::require(doc, "lines", "instance");
    if (!lines.is_array()) throw SchemaError("lines", "expected an array");
    for (const auto& l : lines) {
        if (!l.is_object()) throw SchemaError("lines", "expected objects");
        detail::reject_unknown(l, {"id", "from", "to", "repair_time", "switch"}, "line");
        RawLine line;
        line.id = detail::read_id(detail::require(l, "id", "line"), "id");
        line.from = detail::read_id(detail::require(l, "from", "line"), "from");
        line.to = detail::read_id(detail::require(l, "to", "line"), "to");
        line.repair_time =
            detail::read_number(detail::require(l, "repair_time", "line"), "repair_time");
        if (auto s = l.find("switch"); s != l.end()) {
            if (!s->is_boolean()) throw SchemaError("switch", "expected a boolean");
            line.is_switch = s->get<bool>();
        }
        raw.lines.push_back(std::move(line));
    }
    return raw;
}

inline NetworkInstance parse_instance(std::string_view text) {
    return validate(raw_instance_from_json(parse_json(text)));
}

inline NetworkInstance load_instance(const std::string& path) {
    return parse_instance(detail::read_file(path));
}

inline Json instance_to_json(const NetworkInstance& instance) {
    Json doc;
    doc["root"] = instance.nodes[instance.root].id;
    doc["crews"] = instance.crews;
    doc["nodes"] = Json::array();
    for (const auto& n : instance.nodes) doc["nodes"].push_back({{"id", n.id}, {"weight", n.weight}});
    doc["lines"] = Json::array();
    for (const auto& l : instance.lines) {
        doc["lines"].push_back({{"id", l.id},
                                {"from", instance.nodes[l.parent].id},
                                {"to", instance.nodes[l.child].id},
                                {"repair_time", l.repair_time},
                                {"switch", l.is_switch}});
    }
    return doc;
}

inline void save_instance(const std::string& path, const NetworkInstance& instance) {
    detail::write_file(path, instance_to_json(instance).dump(2) + "\n");
}

inline Json islands_to_json(const Problem& problem) {
    const auto& inst = problem.instance;
    Json doc;
    doc["islands"] = Json::array();
    for (IslandIndex i = 0; i < problem.islands.size(); ++i) {
        const auto& island = problem.islands[i];
        Json lines = Json::array(), nodes = Json::array();
        for (LineIndex j : island.lines) lines.push_back(inst.lines[j].id);
        for (NodeIndex v : island.nodes) nodes.push_back(inst.nodes[v].id);
        const auto parent = problem.precedence.parent[i];
        doc["islands"].push_back({{"id", IslandSet::name(i)},
                                  {"lines", lines},
                                  {"nodes", nodes},
                                  {"weight", island.weight},
                                  {"processing", island.processing},
                                  {"parent", parent == kNone ? Json() : Json(IslandSet::name(parent))}});
    }
    doc["precedence"] = Json::array();
    for (IslandIndex i : problem.precedence.topological_order)
        for (IslandIndex c : problem.precedence.children[i])
            doc["precedence"].push_back({IslandSet::name(i), IslandSet::name(c)});
    doc["root_island"] = IslandSet::name(problem.precedence.root);
    return doc;
}

inline Json result_to_json(const Problem& problem, const AlgoResult& result) {
    const auto& inst = problem.instance;
    Json doc;
    doc["algorithm"] = result.algorithm;
    doc["crews"] = result.schedule.crews;
    doc["assignments"] = Json::array();
    for (const auto& crew : result.schedule.assignments) {
        Json jobs = Json::array();
        for (const auto& a : crew)
            jobs.push_back({{"line", inst.lines[a.line].id}, {"start", a.start}, {"completion", a.completion}});
        doc["assignments"].push_back(std::move(jobs));
    }
    doc["energization"] = Json::object();
    for (IslandIndex i = 0; i < result.energization.size(); ++i)
        doc["energization"][IslandSet::name(i)] = result.energization[i];
    doc["harm"] = result.report.harm;
    return doc;
}

inline void save_result(const std::string& path, const Problem& problem, const AlgoResult& result) {
    detail::write_file(path, result_to_json(problem, result).dump(2) + "\n");
}

}  // namespace restore
