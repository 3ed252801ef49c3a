#pragma once

#include <cstdint>

#include "influmax/graph.hpp"
#include "influmax/rank.hpp"

namespace influmax {

/// Top-k by out-degree (total degree when the graph was built from
/// undirected input), ties broken by smaller node id.
SeedSet select_degree(const Graph& g, std::uint32_t k);

struct PageRankConfig {
    double jump = 0.15;  // random-jump factor
    double tol = 1e-10;
    std::uint32_t max_iters = 500;
};

/// Weighted PageRank on the reversed-influence transition matrix
/// TP_uv = P_vu / sum_{w in N_in(u)} P_wu, with uniform random jump and
/// dangling mass spread uniformly. Scores sum to 1.
RankVector pagerank_scores(const Graph& g, const PageRankConfig& cfg = {});

SeedSet select_pagerank(const Graph& g, std::uint32_t k, const PageRankConfig& cfg = {});

/// Objective for greedy selection: IC spread, or the IC-N net spread
/// sigma_P - lambda * sigma_N.
struct CelfObjective {
    bool icn = false;
    double q = 0.9;
    double lambda = 0.0;

    static CelfObjective ic() { return {false, 0.0, 0.0}; }
    static CelfObjective icn_net(double q, double lambda) { return {true, q, lambda}; }
};

struct CelfEvaluator {
    enum class Kind { MonteCarlo, Exact };
    Kind kind = Kind::MonteCarlo;
    std::uint32_t runs = 10000;
    std::uint64_t seed = 0;

    static CelfEvaluator monte_carlo(std::uint32_t runs, std::uint64_t seed) {
        return {Kind::MonteCarlo, runs, seed};
    }
    static CelfEvaluator exact() { return {Kind::Exact, 0, 0}; }
};

/// Greedy hill-climbing with lazy-forward re-evaluation: cached marginal
/// gains are only recomputed when a stale entry surfaces at the top of the
/// queue. Monte-Carlo gains share one base seed per round so comparisons
/// within a round use common random numbers.
SeedSet greedy_celf(const Graph& g, std::uint32_t k, const CelfObjective& objective,
                    const CelfEvaluator& evaluator);

}  // namespace influmax
