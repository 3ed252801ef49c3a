#include "influmax/generator.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "influmax/rng.hpp"

namespace influmax {

Graph generate_power_law(NodeId n, double avg_degree, double exponent, std::uint64_t seed) {
    if (n < 2) throw ValidationError("power-law generator needs n >= 2");
    if (avg_degree < 1.0) throw ValidationError("power-law generator needs avg_degree >= 1");
    if (exponent <= 2.0) throw ValidationError("power-law exponent must exceed 2");
    const std::uint64_t target_edges = static_cast<std::uint64_t>(std::llround(
        static_cast<double>(n) * avg_degree));
    if (target_edges > static_cast<std::uint64_t>(n) * (n - 1)) {
        throw ValidationError("infeasible degree sequence: avg_degree too large for n");
    }

    std::mt19937_64 rng(detail::mix64(seed ^ 0x9e3779b97f4a7c15ULL));

    // Pareto tail via inverse CDF, scaled so the mean lands on avg_degree:
    // E[x_min * U^(-1/(a-1))] = x_min * (a-1)/(a-2) for exponent a > 2.
    const double shape = exponent - 1.0;
    const double x_min = avg_degree * (exponent - 2.0) / (exponent - 1.0);
    const NodeId max_degree = n - 1;

    std::vector<std::uint32_t> degree(n);
    std::uint64_t total = 0;
    for (NodeId i = 0; i < n; ++i) {
        double u = detail::to_unit_double(rng());
        double d = x_min * std::pow(1.0 - u, -1.0 / shape);
        std::uint32_t di = static_cast<std::uint32_t>(std::llround(d));
        if (di < 1) di = 1;
        if (di > max_degree) di = max_degree;
        degree[i] = di;
        total += di;
    }

    // Pin the total to the requested edge count exactly; walk the nodes in a
    // fixed order nudging degrees within [1, n-1].
    for (NodeId i = 0; total > target_edges; i = (i + 1 == n) ? 0 : i + 1) {
        if (degree[i] > 1) {
            --degree[i];
            --total;
        }
    }
    for (NodeId i = 0; total < target_edges; i = (i + 1 == n) ? 0 : i + 1) {
        if (degree[i] < max_degree) {
            ++degree[i];
            ++total;
        }
    }

    // Uniform targets without self-loops or duplicates.
    EdgeList edges;
    edges.reserve(total);
    std::vector<std::uint32_t> stamp(n, 0);
    std::uint32_t epoch = 0;
    for (NodeId u = 0; u < n; ++u) {
        ++epoch;
        std::uint32_t want = degree[u];
        if (want > (max_degree + 1) / 2) {
            // dense row: sample by walking a shuffled candidate list
            std::vector<NodeId> cand;
            cand.reserve(n - 1);
            for (NodeId v = 0; v < n; ++v) {
                if (v != u) cand.push_back(v);
            }
            for (std::uint32_t i = 0; i < want; ++i) {
                std::uint64_t j = i + bounded_draw(rng, cand.size() - i);
                std::swap(cand[i], cand[j]);
                edges.push_back({u, cand[i], kNoProb});
            }
        } else {
            for (std::uint32_t made = 0; made < want;) {
                NodeId v = static_cast<NodeId>(bounded_draw(rng, n));
                if (v == u || stamp[v] == epoch) continue;
                stamp[v] = epoch;
                edges.push_back({u, v, kNoProb});
                ++made;
            }
        }
    }

    return build_graph(edges, /*directed=*/true, /*min_node_count=*/n);
}

}  // namespace influmax
