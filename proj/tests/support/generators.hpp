#pragma once

// Seeded random-instance generators shared by the unit and acceptance tests.

#include <random>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pennyrig/framework.hpp"
#include "pennyrig/graph.hpp"

#include "builders.hpp"

namespace testsupport {

inline Eigen::MatrixXd random_coords(int n, int d, std::mt19937_64& rng,
                                     double extent = 2.0) {
    std::uniform_real_distribution<double> coord(-extent, extent);
    Eigen::MatrixXd m(n, d);
    for (int v = 0; v < n; ++v) {
        for (int c = 0; c < d; ++c) m(v, c) = coord(rng);
    }
    return m;
}

// Uniform random rotation (via QR of a Gaussian matrix, det forced to +1)
// plus a random translation.
inline Eigen::MatrixXd random_isometry_of(const Eigen::MatrixXd& coords, int d,
                                          std::mt19937_64& rng,
                                          bool allow_reflection = false) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd a(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) a(i, j) = gauss(rng);
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    Eigen::MatrixXd q = qr.householderQ();
    if (!allow_reflection && q.determinant() < 0) q.col(0) *= -1.0;
    if (allow_reflection && q.determinant() > 0 && (rng() & 1)) q.col(0) *= -1.0;
    Eigen::RowVectorXd shift(d);
    for (int c = 0; c < d; ++c) shift(c) = gauss(rng);
    Eigen::MatrixXd out = coords * q.transpose();
    out.rowwise() += shift;
    return out;
}

inline Graph random_gnp(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (coin(rng)) edges.emplace_back(pad_label(i), pad_label(j));
        }
    }
    return Graph(numbered_labels(n), edges);
}

inline pennyrig::Framework random_framework(int n, double p, int d,
                                            std::mt19937_64& rng) {
    Graph g = random_gnp(n, p, rng);
    return pennyrig::Framework(g, d, random_coords(n, d, rng));
}

// Chordal graph built by inserting each vertex adjacent to a clique of the
// current graph (so reverse insertion order is a perfect elimination order).
// Attachment cliques are grown greedily inside common neighborhoods and their
// size is capped by max_attach.
inline Graph random_chordal(int n, int max_attach, std::mt19937_64& rng) {
    std::vector<std::set<int>> adj(n);
    std::uniform_int_distribution<int> attach_dist(1, std::max(1, max_attach));
    for (int v = 1; v < n; ++v) {
        int target = std::min(v, attach_dist(rng));
        std::uniform_int_distribution<int> pick(0, v - 1);
        std::vector<int> clique{pick(rng)};
        while (static_cast<int>(clique.size()) < target) {
            std::vector<int> common;
            for (int cand = 0; cand < v; ++cand) {
                bool ok = true;
                for (int c : clique) {
                    if (cand == c || !adj[c].count(cand)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) common.push_back(cand);
            }
            if (common.empty()) break;
            std::uniform_int_distribution<int> pick2(0, static_cast<int>(common.size()) - 1);
            clique.push_back(common[pick2(rng)]);
        }
        for (int c : clique) {
            adj[v].insert(c);
            adj[c].insert(v);
        }
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int v = 0; v < n; ++v) {
        for (int w : adj[v]) {
            if (w > v) edges.emplace_back(pad_label(v), pad_label(w));
        }
    }
    return Graph(numbered_labels(n), edges);
}

// d-tree on n >= d+1 vertices: K_{d+1} plus vertices attached to random
// d-cliques.
inline Graph random_d_tree(int n, int d, std::mt19937_64& rng) {
    std::vector<std::vector<int>> d_cliques;
    std::vector<std::pair<Vertex, Vertex>> edges;
    // Seed with K_{d+1} and all of its d-subsets.
    for (int i = 0; i <= d; ++i) {
        for (int j = i + 1; j <= d; ++j) edges.emplace_back(pad_label(i), pad_label(j));
    }
    for (int skip = 0; skip <= d; ++skip) {
        std::vector<int> sub;
        for (int i = 0; i <= d; ++i) {
            if (i != skip) sub.push_back(i);
        }
        d_cliques.push_back(sub);
    }
    for (int v = d + 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, static_cast<int>(d_cliques.size()) - 1);
        const std::vector<int> base = d_cliques[pick(rng)];
        for (int c : base) edges.emplace_back(pad_label(v), pad_label(c));
        for (int skip = 0; skip < d; ++skip) {
            std::vector<int> sub{v};
            for (int i = 0; i < d; ++i) {
                if (i != skip) sub.push_back(base[i]);
            }
            d_cliques.push_back(sub);
        }
    }
    return Graph(numbered_labels(n), edges);
}

} // namespace testsupport
