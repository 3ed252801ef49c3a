#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "influmax/graph.hpp"

namespace influmax {

/// Fixed-point iterations abort with DivergenceError once any value passes
/// this guard (large-spreading regimes; lower alpha to proceed).
inline constexpr double kDivergenceGuard = 1e12;

struct DampedSystem {
    double alpha = 0.7;
    std::uint32_t max_iters = 20;
    double tol = 1e-4;  // absolute, max-norm
};

struct RankVector {
    std::vector<double> r;
    std::uint32_t iterations = 0;
    bool converged = false;
};

/// Per-directed-edge messages. m[e] for forward edge e = (u,v) is the
/// estimated influence of v excluding the direction back toward u.
struct EdgeMessages {
    std::vector<double> m;
    std::uint32_t iterations = 0;
    bool converged = false;
};

/// Edge-level message passing. Iterates, from m = 1,
///   m(e=(u,v)) = 1 + alpha * sum_{f=(v,w), w != u} P_vw * m(f)
/// until the max change drops below tol (or max_iters), then scores
///   sigma(u) = 1 + sum_{e=(u,v)} P_uv * m(e).
/// With alpha = 1 this is exact on trees.
std::pair<EdgeMessages, RankVector> influence_propagation(const Graph& g, double alpha,
                                                          std::uint32_t max_iters, double tol);

/// Node-level damped rank: double-buffered iteration of
///   r(u) = 1 + alpha * sum_{v in N_out(u)} P_uv * r(v)
/// from r = 1, stopping when the max change < tol or after max_iters.
RankVector influence_rank_scores(const Graph& g, const DampedSystem& sys = {});

/// Top-k nodes by rank score, ties broken by smaller node id.
SeedSet select_top_k_ir(const Graph& g, std::uint32_t k, double alpha = 0.7);
SeedSet select_top_k_ir(const Graph& g, std::uint32_t k, const DampedSystem& sys);

namespace detail {

/// Shared damped iteration: runs up to max_iters sweeps of
///   r_next = damp .* (1 + alpha * A r)   (damp null = all ones)
/// in place on `r`, returning (iterations, converged). Used verbatim by the
/// IR solver and by every seed-selection round so their scores match exactly.
std::pair<std::uint32_t, bool> damped_rank_iteration(const Graph& g, double alpha,
                                                     std::uint32_t max_iters, double tol,
                                                     const double* damp, std::vector<double>& r,
                                                     std::vector<double>& scratch);

}  // namespace detail

}  // namespace influmax
