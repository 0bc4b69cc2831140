#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pennyrig/error.hpp"

namespace pennyrig {

using Vertex = std::string;

// Simple undirected graph over string-labelled vertices.
//
// Invariants established at construction and preserved by every operation:
//   - vertex labels are distinct and stored sorted; all index-based views use
//     positions in that sorted order,
//   - edges are stored as index pairs (u, v) with u < v, sorted
//     lexicographically, without duplicates, and with no loops.
// These make every traversal and every serialization deterministic.
class Graph {
  public:
    Graph() = default;
    Graph(std::vector<Vertex> vertices,
          const std::vector<std::pair<Vertex, Vertex>>& edges);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Vertex>& vertices() const { return labels_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const Vertex& label(int v) const { return labels_.at(v); }
    // Index of a label in sorted order; throws Error(Parse) if unknown.
    int index_of(const Vertex& label) const;
    bool has_vertex(const Vertex& label) const;

    bool has_edge(int u, int v) const;
    // Neighbor indices of u, sorted ascending.
    const std::vector<int>& neighbors(int u) const { return adjacency_.at(u); }
    int degree(int u) const { return static_cast<int>(adjacency_.at(u).size()); }
    int min_degree() const;

    bool is_complete() const;
    bool is_connected() const;

    // Subgraph induced by the given vertex indices (labels are kept).
    Graph induced(const std::vector<int>& keep) const;
    Graph without_vertex(int v) const;
    Graph without_edge(int u, int v) const;
    Graph with_edge(const Vertex& a, const Vertex& b) const;

  private:
    std::vector<Vertex> labels_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

// Perfect elimination order: at each position, the later neighbors of the
// vertex form a clique. Stored as vertex indices into Graph::vertices().
struct EliminationOrder {
    std::vector<int> order;
};

struct ChordalityResult {
    bool chordal = false;
    std::optional<EliminationOrder> order; // present iff chordal
};

// Maximum-cardinality-search chordality test. Deterministic: ties in the MCS
// weight are broken toward the smallest vertex index. The returned order, when
// present, is verified to be a perfect elimination order before returning.
ChordalityResult is_chordal(const Graph& g);

// Checks the perfect-elimination property of a given order directly.
bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order);

// Size of a largest clique. Linear scan over a perfect elimination order when
// one is supplied (or when the graph is chordal); otherwise exact
// branch-and-bound search guarded by `exact_limit` vertices
// (throws Error(InstanceTooLarge) beyond it).
int clique_number(const Graph& g,
                  const std::optional<EliminationOrder>& peo = std::nullopt,
                  int exact_limit = 24);

// Vertex connectivity test: no set of fewer than k vertices disconnects the
// graph. Convention for complete graphs: K_n counts as k-connected for every
// k <= n - 1. k <= 0 is always true.
bool is_k_connected(const Graph& g, int k);

// A d-tree is built from K_{d+1} by repeatedly attaching a new vertex to a
// d-clique. Recognized by greedily deleting simplicial vertices of degree d.
bool is_d_tree(const Graph& g, int d);

// |E| == d|V| - d(d+1)/2, the edge count of every d-tree.
bool edge_count_tight(const Graph& g, int d);

namespace detail {

// Both connectivity strategies, exposed for cross-checking in tests.
bool k_connected_by_cut_enumeration(const Graph& g, int k);
bool k_connected_by_max_flow(const Graph& g, int k);

// d-tree recognition that deletes an arbitrary (caller-chosen) eligible vertex
// each round, for order-independence property tests. `pick(candidates)` must
// return one element of its argument.
bool is_d_tree_with_picker(const Graph& g, int d,
                           const std::vector<int>& pick_sequence);

} // namespace detail

} // namespace pennyrig
