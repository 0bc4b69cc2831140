#include "pennyrig/io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace pennyrig {

using nlohmann::json;

nlohmann::json graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = g.vertices();
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) {
        edges.push_back(json::array({g.label(u), g.label(v)}));
    }
    j["edges"] = edges;
    return j;
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
        throw Error(ErrorKind::Parse, "graph: expected object with 'vertices' and 'edges'");
    }
    if (!j["vertices"].is_array() || !j["edges"].is_array()) {
        throw Error(ErrorKind::Parse, "graph: 'vertices' and 'edges' must be arrays");
    }
    std::vector<Vertex> vertices;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw Error(ErrorKind::Parse, "graph: vertex labels must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
            throw Error(ErrorKind::Parse, "graph: each edge must be a pair of labels");
        }
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return Graph(std::move(vertices), edges);
}

nlohmann::json realization_to_json(const Framework& f) {
    json coords = json::object();
    for (int v = 0; v < f.graph().vertex_count(); ++v) {
        json row = json::array();
        for (int c = 0; c < f.dimension(); ++c) row.push_back(f.coords()(v, c));
        coords[f.graph().label(v)] = row;
    }
    return json{{"d", f.dimension()}, {"coords", coords}};
}

Framework framework_from_json(const Graph& g, const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("coords")) {
        throw Error(ErrorKind::Parse, "realization: expected object with 'd' and 'coords'");
    }
    if (!j["d"].is_number_integer()) {
        throw Error(ErrorKind::Parse, "realization: 'd' must be an integer");
    }
    int d = j["d"].get<int>();
    if (d < 1) throw Error(ErrorKind::Parse, "realization: 'd' must be >= 1");
    if (!j["coords"].is_object()) {
        throw Error(ErrorKind::Parse, "realization: 'coords' must map labels to rows");
    }
    const auto& coords = j["coords"];
    if (static_cast<int>(coords.size()) != g.vertex_count()) {
        throw Error(ErrorKind::Parse,
                    "realization: coords cover " + std::to_string(coords.size()) +
                        " vertices, graph has " + std::to_string(g.vertex_count()));
    }
    Eigen::MatrixXd m(g.vertex_count(), d);
    for (const auto& [label, row] : coords.items()) {
        int v = -1;
        try {
            v = g.index_of(label);
        } catch (const Error&) {
            throw Error(ErrorKind::Parse, "realization: unknown vertex label: " + label);
        }
        if (!row.is_array() || static_cast<int>(row.size()) != d) {
            throw Error(ErrorKind::Parse,
                        "realization: coordinates of '" + label + "' must have length " +
                            std::to_string(d));
        }
        for (int c = 0; c < d; ++c) {
            if (!row[c].is_number()) {
                throw Error(ErrorKind::Parse,
                            "realization: coordinates of '" + label + "' must be numbers");
            }
            m(v, c) = row[c].get<double>();
        }
    }
    return Framework(g, d, std::move(m));
}

namespace {

json load_json_file(const std::string& path, const std::string& what) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + what + " file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, what + " file " + path + ": " + e.what());
    }
    return j;
}

} // namespace

Graph load_graph_file(const std::string& path) {
    return graph_from_json(load_json_file(path, "graph"));
}

Framework load_framework_file(const Graph& g, const std::string& path) {
    return framework_from_json(g, load_json_file(path, "realization"));
}

void save_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Parse, "cannot write graph file: " + path);
    out << graph_to_json(g).dump(2) << "\n";
}

void save_realization_file(const Framework& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Parse, "cannot write realization file: " + path);
    out << realization_to_json(f).dump(2) << "\n";
}

nlohmann::json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, what + ": " + e.what());
    }
}

} // namespace pennyrig
