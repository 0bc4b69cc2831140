#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "pennyrig/framework.hpp"
#include "pennyrig/graph.hpp"

namespace pennyrig {

// JSON formats.
//
// Graph:        {"vertices": ["a", "b"], "edges": [["a", "b"]]}
//               Edge pairs are serialized with the lexicographically smaller
//               label first and the edge list sorted.
// Realization:  {"d": 2, "coords": {"a": [0.0, 0.0], "b": [1.0, 0.0]}}
//
// Loaders throw Error(Parse) on malformed or inconsistent input: unknown or
// missing fields, duplicate vertices or edges, loops, edges naming undeclared
// vertices, coordinate rows of the wrong length, realizations whose labels do
// not match the graph.

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json realization_to_json(const Framework& f);
// Combines a graph with a realization file's coordinates.
Framework framework_from_json(const Graph& g, const nlohmann::json& j);

Graph load_graph_file(const std::string& path);
Framework load_framework_file(const Graph& g, const std::string& path);
void save_graph_file(const Graph& g, const std::string& path);
void save_realization_file(const Framework& f, const std::string& path);

// Parses text rather than a file; used by the CLI for stdin input.
nlohmann::json parse_json_text(const std::string& text, const std::string& what);

} // namespace pennyrig
