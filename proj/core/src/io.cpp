#include "listpack/io.hpp"

#include "listpack/version.hpp"

#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace listpack::io {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
    try {
        auto j = json::parse(text);
        if (!j.is_object())
            throw ParseError("expected a JSON object");
        return j;
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end())
        throw ParseError(std::string("missing field \"") + name + "\"");
    return *it;
}

int int_field(const json& j, const char* name) {
    const auto& v = field(j, name);
    if (!v.is_number_integer())
        throw ParseError(std::string("field \"") + name + "\" must be an integer");
    return v.get<int>();
}

std::vector<std::vector<int>> int_rows(const json& v, const char* name) {
    if (!v.is_array())
        throw ParseError(std::string("field \"") + name + "\" must be an array of arrays");
    std::vector<std::vector<int>> rows;
    for (const auto& row : v) {
        if (!row.is_array())
            throw ParseError(std::string("field \"") + name + "\" must be an array of arrays");
        auto& out = rows.emplace_back();
        for (const auto& x : row) {
            if (!x.is_number_integer())
                throw ParseError(std::string("field \"") + name + "\" holds a non-integer");
            out.push_back(x.get<int>());
        }
    }
    return rows;
}

Graph graph_from(const json& j) {
    const int n = int_field(j, "n");
    if (n < 0)
        throw ParseError("\"n\" must be non-negative");
    std::vector<Edge> edges;
    for (const auto& e : int_rows(field(j, "edges"), "edges")) {
        if (e.size() != 2)
            throw ParseError("every edge must have two endpoints");
        edges.emplace_back(e[0], e[1]);
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

ListInstance list_instance_from(const json& j) {
    auto g = graph_from(j);
    auto rows = int_rows(field(j, "lists"), "lists");
    if (static_cast<int>(rows.size()) != g.vertex_count())
        throw ParseError("\"lists\" must have one list per vertex");
    try {
        return {std::move(g), ListAssignment(std::move(rows))};
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

CorrespondenceCover cover_from(const json& j) {
    auto g = graph_from(j);
    const int k = int_field(j, "k");
    if (k < 0)
        throw ParseError("\"k\" must be non-negative");
    const auto& m = field(j, "matchings");
    if (!m.is_object())
        throw ParseError("\"matchings\" must be an object keyed by \"u-v\"");
    MatchingMap matchings;
    for (const auto& [key, value] : m.items()) {
        int u = 0;
        int v = 0;
        char dash = 0;
        std::istringstream in(key);
        if (!(in >> u >> dash >> v) || dash != '-' || !in.eof())
            throw ParseError("bad matching key \"" + key + "\"");
        const bool mirrored = u > v;
        if (mirrored)
            std::swap(u, v);
        auto& pairs = matchings[{u, v}];
        for (const auto& p : int_rows(value, "matchings")) {
            if (p.size() != 2)
                throw ParseError("matching entries must be [i, j] pairs");
            // Keys written high-low are mirrored so pairs read (low slot, high slot).
            if (mirrored)
                pairs.emplace_back(p[1], p[0]);
            else
                pairs.emplace_back(p[0], p[1]);
        }
    }
    CorrespondenceCover cover(std::move(g), k, std::move(matchings));
    if (auto bad = validate_cover(cover))
        throw ParseError("invalid cover: " + bad->message);
    return cover;
}

json stamp(const char* schema) {
    json j;
    j["schema"] = schema;
    j["version"] = listpack::version;
    return j;
}

void put_graph(json& j, const Graph& g) {
    j["n"] = g.vertex_count();
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    j["edges"] = std::move(edges);
}

}  // namespace

Graph parse_graph(const std::string& text) { return graph_from(parse_text(text)); }

ListInstance parse_list_instance(const std::string& text) { return list_instance_from(parse_text(text)); }

CorrespondenceCover parse_cover(const std::string& text) { return cover_from(parse_text(text)); }

Instance parse_instance(const std::string& text) {
    auto j = parse_text(text);
    if (j.contains("lists"))
        return list_instance_from(j);
    if (j.contains("matchings"))
        return cover_from(j);
    throw ParseError("instance needs \"lists\" or \"matchings\"");
}

Packing parse_packing(const std::string& text) {
    auto j = parse_text(text);
    Packing p;
    p.k = int_field(j, "k");
    const auto& mode = field(j, "mode");
    if (mode == "list")
        p.mode = PackingMode::list;
    else if (mode == "cover")
        p.mode = PackingMode::cover;
    else
        throw ParseError("\"mode\" must be \"list\" or \"cover\"");
    p.colourings = int_rows(field(j, "colourings"), "colourings");
    return p;
}

probabilistic::FractionalColoring parse_fractional(const std::string& text) {
    auto j = parse_text(text);
    return {int_field(j, "a"), int_field(j, "b"), int_rows(field(j, "assignment"), "assignment")};
}

std::string to_json(const Graph& g) {
    auto j = stamp("listpack.graph");
    put_graph(j, g);
    return j.dump();
}

std::string to_json(const ListInstance& instance) {
    auto j = stamp("listpack.list-instance");
    put_graph(j, instance.graph);
    j["lists"] = instance.lists.lists();
    return j.dump();
}

std::string to_json(const CorrespondenceCover& cover) {
    auto j = stamp("listpack.cover");
    put_graph(j, cover.graph());
    j["k"] = cover.k();
    json m = json::object();
    for (const auto& [e, pairs] : cover.matchings()) {
        json list = json::array();
        for (auto [a, b] : pairs)
            list.push_back({a, b});
        m[std::to_string(e.first) + "-" + std::to_string(e.second)] = std::move(list);
    }
    j["matchings"] = std::move(m);
    return j.dump();
}

std::string to_json(const Packing& packing) {
    auto j = stamp("listpack.packing");
    j["k"] = packing.k;
    j["mode"] = packing.mode == PackingMode::list ? "list" : "cover";
    j["colourings"] = packing.colourings;
    return j.dump();
}

std::string to_json(const probabilistic::FractionalColoring& fc) {
    auto j = stamp("listpack.fractional-colouring");
    j["a"] = fc.a;
    j["b"] = fc.b;
    j["assignment"] = fc.assignment;
    return j.dump();
}

std::string read_source(const std::string& path) {
    std::ostringstream out;
    if (path == "-") {
        out << std::cin.rdbuf();
        return out.str();
    }
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    out << in.rdbuf();
    return out.str();
}

}  // namespace listpack::io
