#include "pennyrig/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace pennyrig {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::DimensionUnsupported: return "dimension-unsupported";
    case ErrorKind::InstanceTooLarge: return "instance-too-large";
    case ErrorKind::GraphMismatch: return "graph-mismatch";
    case ErrorKind::DegenerateSpan: return "degenerate-span";
    case ErrorKind::PreconditionFailed: return "precondition-failed";
    case ErrorKind::WitnessInvalid: return "witness-invalid";
    case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

Graph::Graph(std::vector<Vertex> vertices,
             const std::vector<std::pair<Vertex, Vertex>>& edges) {
    labels_ = std::move(vertices);
    std::sort(labels_.begin(), labels_.end());
    for (std::size_t i = 1; i < labels_.size(); ++i) {
        if (labels_[i - 1] == labels_[i]) {
            throw Error(ErrorKind::Parse, "duplicate vertex label: " + labels_[i]);
        }
    }
    adjacency_.assign(labels_.size(), {});
    for (const auto& [a, b] : edges) {
        int u = index_of(a);
        int v = index_of(b);
        if (u == v) {
            throw Error(ErrorKind::Parse, "loop edge at vertex: " + a);
        }
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i - 1] == edges_[i]) {
            throw Error(ErrorKind::Parse,
                        "duplicate edge: " + labels_[edges_[i].first] + " -- " +
                            labels_[edges_[i].second]);
        }
    }
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

int Graph::index_of(const Vertex& label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) {
        throw Error(ErrorKind::Parse, "unknown vertex label: " + label);
    }
    return static_cast<int>(it - labels_.begin());
}

bool Graph::has_vertex(const Vertex& label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nbrs = adjacency_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::min_degree() const {
    int best = vertex_count() == 0 ? 0 : degree(0);
    for (int v = 1; v < vertex_count(); ++v) best = std::min(best, degree(v));
    return best;
}

bool Graph::is_complete() const {
    long long n = vertex_count();
    return static_cast<long long>(edge_count()) == n * (n - 1) / 2;
}

bool Graph::is_connected() const {
    int n = vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adjacency_[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == n;
}

Graph Graph::induced(const std::vector<int>& keep) const {
    std::vector<char> in(vertex_count(), 0);
    std::vector<Vertex> verts;
    for (int v : keep) {
        if (v < 0 || v >= vertex_count()) {
            throw Error(ErrorKind::Internal, "induced: vertex index out of range");
        }
        if (!in[v]) verts.push_back(labels_[v]);
        in[v] = 1;
    }
    std::vector<std::pair<Vertex, Vertex>> kept_edges;
    for (const auto& [u, v] : edges_) {
        if (in[u] && in[v]) kept_edges.emplace_back(labels_[u], labels_[v]);
    }
    return Graph(std::move(verts), kept_edges);
}

Graph Graph::without_vertex(int v) const {
    std::vector<int> keep;
    for (int u = 0; u < vertex_count(); ++u) {
        if (u != v) keep.push_back(u);
    }
    return induced(keep);
}

Graph Graph::without_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    std::vector<std::pair<Vertex, Vertex>> kept;
    bool found = false;
    for (const auto& [a, b] : edges_) {
        if (a == u && b == v) {
            found = true;
            continue;
        }
        kept.emplace_back(labels_[a], labels_[b]);
    }
    if (!found) {
        throw Error(ErrorKind::PreconditionFailed, "without_edge: edge not present");
    }
    return Graph(labels_, kept);
}

Graph Graph::with_edge(const Vertex& a, const Vertex& b) const {
    std::vector<std::pair<Vertex, Vertex>> all;
    for (const auto& [u, v] : edges_) all.emplace_back(labels_[u], labels_[v]);
    all.emplace_back(a, b);
    return Graph(labels_, all);
}

// ---------------------------------------------------------------------------
// Chordality via maximum cardinality search
// ---------------------------------------------------------------------------

bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) {
        throw Error(ErrorKind::PreconditionFailed, "order is not a permutation");
    }
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (v < 0 || v >= n || pos[v] != -1) {
            throw Error(ErrorKind::PreconditionFailed, "order is not a permutation");
        }
        pos[v] = i;
    }
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        std::vector<int> later;
        for (int w : g.neighbors(v)) {
            if (pos[w] > i) later.push_back(w);
        }
        for (std::size_t a = 0; a < later.size(); ++a) {
            for (std::size_t b = a + 1; b < later.size(); ++b) {
                if (!g.has_edge(later[a], later[b])) return false;
            }
        }
    }
    return true;
}

ChordalityResult is_chordal(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return {true, EliminationOrder{{}}};

    // Maximum cardinality search, ties broken toward the smallest index.
    std::vector<int> weight(n, 0);
    std::vector<char> numbered(n, 0);
    std::vector<int> pick_order; // first pick receives the highest number
    pick_order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (!numbered[v] && (best == -1 || weight[v] > weight[best])) best = v;
        }
        numbered[best] = 1;
        pick_order.push_back(best);
        for (int w : g.neighbors(best)) {
            if (!numbered[w]) ++weight[w];
        }
    }
    std::vector<int> order(pick_order.rbegin(), pick_order.rend());
    if (!is_perfect_elimination_order(g, order)) return {false, std::nullopt};
    return {true, EliminationOrder{std::move(order)}};
}

// ---------------------------------------------------------------------------
// Clique number
// ---------------------------------------------------------------------------

namespace {

// Branch-and-bound maximum clique (Bron--Kerbosch with pivoting).
void best_clique(const Graph& g, std::vector<int>& r, std::vector<int>& p,
                 std::vector<int>& x, int& best) {
    if (p.empty() && x.empty()) {
        best = std::max(best, static_cast<int>(r.size()));
        return;
    }
    if (static_cast<int>(r.size() + p.size()) <= best) return;
    int pivot = -1, pivot_deg = -1;
    for (int cand : p) {
        int deg = 0;
        for (int u : p) {
            if (g.has_edge(cand, u)) ++deg;
        }
        if (deg > pivot_deg) {
            pivot = cand;
            pivot_deg = deg;
        }
    }
    for (int u : x) {
        int deg = 0;
        for (int w : p) {
            if (g.has_edge(u, w)) ++deg;
        }
        if (deg > pivot_deg) {
            pivot = u;
            pivot_deg = deg;
        }
    }
    std::vector<int> branch;
    for (int v : p) {
        if (pivot == -1 || !g.has_edge(pivot, v)) branch.push_back(v);
    }
    for (int v : branch) {
        std::vector<int> p2, x2;
        for (int w : p) {
            if (g.has_edge(v, w)) p2.push_back(w);
        }
        for (int w : x) {
            if (g.has_edge(v, w)) x2.push_back(w);
        }
        r.push_back(v);
        best_clique(g, r, p2, x2, best);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

} // namespace

int clique_number(const Graph& g, const std::optional<EliminationOrder>& peo,
                  int exact_limit) {
    int n = g.vertex_count();
    if (n == 0) return 0;

    std::optional<EliminationOrder> order = peo;
    if (!order) {
        auto chordal = is_chordal(g);
        if (chordal.chordal) order = chordal.order;
    }
    if (order) {
        std::vector<int> pos(n, -1);
        for (int i = 0; i < n; ++i) pos[order->order[i]] = i;
        int best = 1;
        for (int i = 0; i < n; ++i) {
            int v = order->order[i];
            int later = 0;
            for (int w : g.neighbors(v)) {
                if (pos[w] > i) ++later;
            }
            best = std::max(best, later + 1);
        }
        return best;
    }

    if (n > exact_limit) {
        throw Error(ErrorKind::InstanceTooLarge,
                    "clique_number: exact search limited to " +
                        std::to_string(exact_limit) + " vertices");
    }
    std::vector<int> r, p(n), x;
    std::iota(p.begin(), p.end(), 0);
    int best = 0;
    best_clique(g, r, p, x, best);
    return best;
}

// ---------------------------------------------------------------------------
// Vertex connectivity
// ---------------------------------------------------------------------------

namespace detail {

namespace {

bool connected_after_removal(const Graph& g, const std::vector<char>& removed) {
    int n = g.vertex_count();
    int start = -1, remaining = 0;
    for (int v = 0; v < n; ++v) {
        if (!removed[v]) {
            ++remaining;
            if (start == -1) start = v;
        }
    }
    if (remaining <= 1) return true;
    std::vector<char> seen(n, 0);
    std::deque<int> queue{start};
    seen[start] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v)) {
            if (!removed[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == remaining;
}

bool any_cut_of_size(const Graph& g, int size, int first, std::vector<char>& removed) {
    if (size == 0) return !connected_after_removal(g, removed);
    for (int v = first; v < g.vertex_count(); ++v) {
        removed[v] = 1;
        if (any_cut_of_size(g, size - 1, v + 1, removed)) {
            removed[v] = 0;
            return true;
        }
        removed[v] = 0;
    }
    return false;
}

// Unit-capacity max flow between split vertices, capped at `cap` augmenting
// paths (enough to decide "at least k vertex-disjoint paths").
int vertex_disjoint_paths(const Graph& g, int s, int t, int cap) {
    int n = g.vertex_count();
    // Node 2v = v_in, 2v+1 = v_out. Arcs as adjacency with residual capacity.
    struct Arc {
        int to, rev, cap;
    };
    std::vector<std::vector<Arc>> arcs(2 * n);
    auto add_arc = [&](int a, int b, int capacity) {
        arcs[a].push_back({b, static_cast<int>(arcs[b].size()), capacity});
        arcs[b].push_back({a, static_cast<int>(arcs[a].size()) - 1, 0});
    };
    const int INF = 1 << 29;
    for (int v = 0; v < n; ++v) {
        add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? INF : 1);
    }
    for (const auto& [u, v] : g.edges()) {
        add_arc(2 * u + 1, 2 * v, INF);
        add_arc(2 * v + 1, 2 * u, INF);
    }
    int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    while (flow < cap) {
        std::vector<int> prev_node(2 * n, -1), prev_arc(2 * n, -1);
        std::deque<int> queue{source};
        prev_node[source] = source;
        while (!queue.empty() && prev_node[sink] == -1) {
            int v = queue.front();
            queue.pop_front();
            for (int i = 0; i < static_cast<int>(arcs[v].size()); ++i) {
                const Arc& a = arcs[v][i];
                if (a.cap > 0 && prev_node[a.to] == -1) {
                    prev_node[a.to] = v;
                    prev_arc[a.to] = i;
                    queue.push_back(a.to);
                }
            }
        }
        if (prev_node[sink] == -1) break;
        for (int v = sink; v != source; v = prev_node[v]) {
            Arc& a = arcs[prev_node[v]][prev_arc[v]];
            a.cap -= 1;
            arcs[v][a.rev].cap += 1;
        }
        ++flow;
    }
    return flow;
}

} // namespace

bool k_connected_by_cut_enumeration(const Graph& g, int k) {
    int n = g.vertex_count();
    if (k <= 0) return true;
    if (g.is_complete()) return k <= n - 1;
    if (k > n - 2) return false; // non-complete graphs are at most (n-2)-connected
    if (!g.is_connected()) return false;
    std::vector<char> removed(n, 0);
    for (int size = 1; size < k; ++size) {
        if (any_cut_of_size(g, size, 0, removed)) return false;
    }
    return true;
}

bool k_connected_by_max_flow(const Graph& g, int k) {
    int n = g.vertex_count();
    if (k <= 0) return true;
    if (g.is_complete()) return k <= n - 1;
    if (k > n - 2) return false;
    if (!g.is_connected()) return false;
    if (g.min_degree() < k) return false;
    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            if (vertex_disjoint_paths(g, s, t, k) < k) return false;
        }
    }
    return true;
}

} // namespace detail

bool is_k_connected(const Graph& g, int k) {
    if (g.vertex_count() <= 16) return detail::k_connected_by_cut_enumeration(g, k);
    return detail::k_connected_by_max_flow(g, k);
}

// ---------------------------------------------------------------------------
// d-tree recognition
// ---------------------------------------------------------------------------

namespace {

// Shared deletion loop: repeatedly remove a simplicial vertex of degree d,
// chosen by `choose` among all eligible candidates, until K_{d+1} remains.
bool d_tree_by_deletion(const Graph& g, int d,
                        const std::function<int(const std::vector<int>&)>& choose) {
    int n = g.vertex_count();
    if (n < d + 1) return false;
    std::vector<std::set<int>> adj(n);
    for (const auto& [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<char> alive(n, 1);
    int alive_count = n;
    auto simplicial_of_degree_d = [&](int v) {
        if (static_cast<int>(adj[v].size()) != d) return false;
        for (auto it = adj[v].begin(); it != adj[v].end(); ++it) {
            auto jt = it;
            for (++jt; jt != adj[v].end(); ++jt) {
                if (!adj[*it].count(*jt)) return false;
            }
        }
        return true;
    };
    while (alive_count > d + 1) {
        std::vector<int> candidates;
        for (int v = 0; v < n; ++v) {
            if (alive[v] && simplicial_of_degree_d(v)) candidates.push_back(v);
        }
        if (candidates.empty()) return false;
        int v = choose(candidates);
        for (int w : adj[v]) adj[w].erase(v);
        adj[v].clear();
        alive[v] = 0;
        --alive_count;
    }
    // The remainder must be a complete graph on d+1 vertices.
    for (int v = 0; v < n; ++v) {
        if (alive[v] && static_cast<int>(adj[v].size()) != d) return false;
    }
    return true;
}

} // namespace

bool is_d_tree(const Graph& g, int d) {
    if (d < 1) {
        throw Error(ErrorKind::PreconditionFailed, "is_d_tree: d must be >= 1");
    }
    return d_tree_by_deletion(g, d, [](const std::vector<int>& c) { return c.front(); });
}

namespace detail {

bool is_d_tree_with_picker(const Graph& g, int d,
                           const std::vector<int>& pick_sequence) {
    if (d < 1) {
        throw Error(ErrorKind::PreconditionFailed, "is_d_tree: d must be >= 1");
    }
    std::size_t step = 0;
    return d_tree_by_deletion(g, d, [&](const std::vector<int>& c) {
        int raw = pick_sequence.empty()
                      ? 0
                      : pick_sequence[step++ % pick_sequence.size()];
        return c[static_cast<std::size_t>(raw) % c.size()];
    });
}

} // namespace detail

bool edge_count_tight(const Graph& g, int d) {
    long long n = g.vertex_count();
    return static_cast<long long>(g.edge_count()) ==
           d * n - static_cast<long long>(d) * (d + 1) / 2;
}

} // namespace pennyrig
