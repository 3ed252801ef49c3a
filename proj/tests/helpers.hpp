#pragma once

// Shared fixtures and independent oracles for the test suites. Everything
// here is deliberately brute-force and separate from the library's solvers.

#include <cmath>
#include <random>
#include <vector>

#include "influmax/generator.hpp"
#include "influmax/graph.hpp"

namespace testutil {

using influmax::EdgeList;
using influmax::Graph;
using influmax::NodeId;

inline Graph path_graph(std::initializer_list<double> probs) {
    EdgeList edges;
    NodeId u = 0;
    for (double p : probs) {
        edges.push_back({u, u + 1, p});
        ++u;
    }
    return influmax::build_graph(edges, true, u + 1);
}

// 0 -> {1,2} -> 3
inline Graph diamond_graph(double p) {
    return influmax::build_graph({{0, 1, p}, {0, 2, p}, {1, 3, p}, {2, 3, p}}, true);
}

inline Graph star_graph(NodeId center, NodeId leaves_from, NodeId leaf_count, double p) {
    EdgeList edges;
    for (NodeId i = 0; i < leaf_count; ++i) edges.push_back({center, leaves_from + i, p});
    return influmax::build_graph(edges, true);
}

/// Random out-arborescence: node i > 0 hangs under a uniform parent < i.
inline Graph random_tree(NodeId n, std::mt19937_64& rng, bool bidirected = false) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    EdgeList edges;
    for (NodeId i = 1; i < n; ++i) {
        NodeId parent = static_cast<NodeId>(rng() % i);
        edges.push_back({parent, i, unit(rng)});
        if (bidirected) edges.push_back({i, parent, unit(rng)});
    }
    return influmax::build_graph(edges, true, n);
}

/// Random digraph with the given edge-inclusion probability.
inline Graph random_digraph(NodeId n, double density, std::mt19937_64& rng,
                            std::size_t max_edges = 25) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (;;) {
        EdgeList edges;
        for (NodeId u = 0; u < n; ++u) {
            for (NodeId v = 0; v < n; ++v) {
                if (u != v && unit(rng) < density) edges.push_back({u, v, unit(rng)});
            }
        }
        if (edges.size() <= max_edges) return influmax::build_graph(edges, true, n);
    }
}

/// Dense Gaussian elimination with partial pivoting; solves A x = b.
inline std::vector<double> dense_solve(std::vector<std::vector<double>> a,
                                       std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (std::fabs(a[row][col]) > std::fabs(a[pivot][col])) pivot = row;
        }
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t row = col + 1; row < n; ++row) {
            const double f = a[row][col] / a[col][col];
            if (f == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
            b[row] -= f * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t row = n; row-- > 0;) {
        double acc = b[row];
        for (std::size_t j = row + 1; j < n; ++j) acc -= a[row][j] * x[j];
        x[row] = acc / a[row][row];
    }
    return x;
}

/// Solves the rank system (I - alpha*A) x = 1 densely, A_uv = P_uv.
inline std::vector<double> dense_rank_solve(const Graph& g, double alpha) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (std::size_t u = 0; u < n; ++u) {
        a[u][u] = 1.0;
        auto targets = g.out_neighbors(static_cast<NodeId>(u));
        auto probs = g.out_probs(static_cast<NodeId>(u));
        for (std::size_t i = 0; i < targets.size(); ++i) {
            a[u][targets[i]] -= alpha * probs[i];
        }
    }
    return dense_solve(std::move(a), std::vector<double>(n, 1.0));
}

/// Dense PageRank oracle: solves the stationary equations of the reversed
/// transition matrix with uniform jump and uniform dangling redistribution.
inline std::vector<double> dense_pagerank_solve(const Graph& g, double jump) {
    const std::size_t n = g.node_count();
    std::vector<double> in_mass(n, 0.0);
    for (NodeId u = 0; u < n; ++u) {
        auto targets = g.out_neighbors(u);
        auto probs = g.out_probs(u);
        for (std::size_t i = 0; i < targets.size(); ++i) in_mass[targets[i]] += probs[i];
    }
    // x = jump/n * 1 + (1-jump) * M x  with M_vu the u->v transition mass
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (std::size_t v = 0; v < n; ++v) a[v][v] = 1.0;
    for (NodeId v = 0; v < n; ++v) {
        auto targets = g.out_neighbors(v);
        auto probs = g.out_probs(v);
        for (std::size_t i = 0; i < targets.size(); ++i) {
            const NodeId u = targets[i];
            if (probs[i] > 0.0) a[v][u] -= (1.0 - jump) * probs[i] / in_mass[u];
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u = 0; u < n; ++u) {
            if (in_mass[u] <= 0.0) a[v][u] -= (1.0 - jump) / n;
        }
    }
    return dense_solve(std::move(a), std::vector<double>(n, jump / n));
}

}  // namespace testutil
