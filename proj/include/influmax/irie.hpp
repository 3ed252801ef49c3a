#pragma once

#include <cstdint>
#include <vector>

#include "influmax/graph.hpp"

namespace influmax {

inline constexpr double kDefaultThetaIc = 1.0 / 320.0;
inline constexpr double kDefaultThetaIcn = 1.0 / 160.0;

/// Maximum-probability-path out-tree of one seed, pruned below theta.
/// nodes[i] was settled with path probability path_prob[i] reached through
/// parent[i] (the root lists itself with probability 1).
struct MioaTree {
    NodeId root = 0;
    double theta = kDefaultThetaIc;
    std::vector<NodeId> nodes;
    std::vector<double> path_prob;
    std::vector<NodeId> parent;
};

/// Dijkstra on edge length -log P_uv from s (zero-probability edges are
/// unreachable), keeping only nodes whose best path probability is >= theta.
/// Equal-probability paths keep the smaller parent id.
MioaTree compute_mioa(const Graph& g, NodeId s, double theta);

/// Per-node activation probability estimate for a seed set.
struct ActivationProb {
    std::vector<double> ap;
    std::vector<NodeId> seeds;
};

/// ap(u) = min(1, sum over seeds of the seed's tree probability at u), with
/// ap(s) = 1 for every seed.
ActivationProb estimate_ap(const Graph& g, std::span<const NodeId> seeds, double theta);

struct IrieParams {
    double alpha = 0.7;
    double theta = kDefaultThetaIc;
    double tol = 1e-4;
    std::uint32_t first_round_iters = 20;
    std::uint32_t later_round_iters = 5;  // warm-started rounds
};

/// Greedy seed selection with rank/estimation interleaving: each round damps
/// the rank system by (1 - AP_S(u)), re-converges it (cold on round one, warm
/// afterwards), picks the arg-max rank, and folds the new seed's tree into
/// the running activation-probability vector.
SeedSet irie_select(const Graph& g, std::uint32_t k, const IrieParams& params = {});

/// Coupled per-node estimates for the IC-N objective: expected positive
/// marginal gP, expected negative marginal gN, and the negative-carrier
/// value h (marginal influence when reached by a negative activation).
struct IcnRankTriple {
    std::vector<double> gp, gn, h;
    double q = 0.9;
    double lambda = 0.0;
    std::uint32_t iterations = 0;
    bool converged = false;
};

/// Empty-seed-set fixed point of the (gP, gN, h) system.
IcnRankTriple icn_rank_scores(const Graph& g, double q, double alpha, std::uint32_t max_iters,
                              double tol);

struct IrieNParams {
    double alpha = 0.7;
    double theta = kDefaultThetaIcn;
    double tol = 1e-4;
    std::uint32_t first_round_iters = 20;
    std::uint32_t later_round_iters = 5;
    double q = 0.9;        // quality factor
    double lambda = 0.0;   // weight of negative spread in the objective
};

/// IC-N variant: iterates the coupled (gP, gN, h) system from gP = q,
/// gN = 1-q, h = 1 and selects argmax gP(u) - lambda * gN(u) each round.
/// Activation probabilities are estimated exactly as in the IC case.
SeedSet irie_n_select(const Graph& g, std::uint32_t k, const IrieNParams& params = {});

}  // namespace influmax
