#include "influmax/rank.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "influmax/kernels.hpp"

namespace influmax {

namespace {

void check_nonempty(const Graph& g) {
    if (g.node_count() == 0) throw ValidationError("graph is empty");
}

[[noreturn]] void throw_divergence(double alpha) {
    throw DivergenceError("rank iteration exceeded " + std::to_string(kDivergenceGuard) +
                          " (large-spreading regime at alpha=" + std::to_string(alpha) +
                          "; lower alpha)");
}

}  // namespace

namespace detail {

std::pair<std::uint32_t, bool> damped_rank_iteration(const Graph& g, double alpha,
                                                     std::uint32_t max_iters, double tol,
                                                     const double* damp, std::vector<double>& r,
                                                     std::vector<double>& scratch) {
    const auto& k = kernels::active();
    const std::uint32_t n = g.node_count();
    scratch.resize(n);
    std::uint32_t iters = 0;
    bool converged = false;
    while (iters < max_iters) {
        k.rank_sweep(g.offsets_data(), g.targets_data(), g.probs_data(), n, alpha, damp,
                     r.data(), scratch.data());
        ++iters;
        const double diff = k.max_abs_diff(r.data(), scratch.data(), n);
        r.swap(scratch);
        if (k.max_abs(r.data(), n) > kDivergenceGuard) throw_divergence(alpha);
        if (diff < tol || diff == 0.0) {
            converged = true;
            break;
        }
    }
    return {iters, converged};
}

}  // namespace detail

RankVector influence_rank_scores(const Graph& g, const DampedSystem& sys) {
    check_nonempty(g);
    RankVector out;
    out.r.assign(g.node_count(), 1.0);
    std::vector<double> scratch;
    auto [iters, converged] =
        detail::damped_rank_iteration(g, sys.alpha, sys.max_iters, sys.tol, nullptr, out.r, scratch);
    out.iterations = iters;
    out.converged = converged;
    return out;
}

std::pair<EdgeMessages, RankVector> influence_propagation(const Graph& g, double alpha,
                                                          std::uint32_t max_iters, double tol) {
    check_nonempty(g);
    const std::uint64_t m = g.edge_count();

    // source node of every CSR edge
    std::vector<NodeId> source(m);
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (std::uint64_t e = g.out_begin(u); e < g.out_end(u); ++e) {
            source[e] = u;
        }
    }

    EdgeMessages msg;
    msg.m.assign(m, 1.0);
    std::vector<double> next(m);

    // m(e=(u,v)) = 1 + alpha * sum over out-edges f=(v,w) of v with w != u
    while (msg.iterations < max_iters) {
        double diff = 0.0;
        double peak = 0.0;
        for (std::uint64_t e = 0; e < m; ++e) {
            const NodeId u = source[e];
            const NodeId v = g.edge_target(e);
            double acc = 0.0;
            for (std::uint64_t f = g.out_begin(v); f < g.out_end(v); ++f) {
                if (g.edge_target(f) != u) acc += g.edge_prob(f) * msg.m[f];
            }
            next[e] = 1.0 + alpha * acc;
            diff = std::max(diff, std::fabs(next[e] - msg.m[e]));
            peak = std::max(peak, next[e]);
        }
        msg.m.swap(next);
        ++msg.iterations;
        if (peak > kDivergenceGuard) throw_divergence(alpha);
        if (diff < tol || diff == 0.0) {
            msg.converged = true;
            break;
        }
    }

    RankVector sigma;
    sigma.r.assign(g.node_count(), 1.0);
    sigma.iterations = msg.iterations;
    sigma.converged = msg.converged;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        double acc = 0.0;
        for (std::uint64_t e = g.out_begin(u); e < g.out_end(u); ++e) {
            acc += g.edge_prob(e) * msg.m[e];
        }
        sigma.r[u] = 1.0 + acc;
    }
    return {std::move(msg), std::move(sigma)};
}

namespace {

SeedSet top_k_by_score(const std::vector<double>& score, std::uint32_t k) {
    std::vector<NodeId> order(score.size());
    std::iota(order.begin(), order.end(), NodeId{0});
    std::partial_sort(order.begin(), order.begin() + k, order.end(),
                      [&](NodeId a, NodeId b) {
                          if (score[a] != score[b]) return score[a] > score[b];
                          return a < b;
                      });
    SeedSet out;
    out.nodes.assign(order.begin(), order.begin() + k);
    out.scores.reserve(k);
    for (NodeId u : out.nodes) out.scores.push_back(score[u]);
    return out;
}

}  // namespace

SeedSet select_top_k_ir(const Graph& g, std::uint32_t k, const DampedSystem& sys) {
    check_nonempty(g);
    if (k < 1 || k > g.node_count()) throw ValidationError("k out of range");
    return top_k_by_score(influence_rank_scores(g, sys).r, k);
}

SeedSet select_top_k_ir(const Graph& g, std::uint32_t k, double alpha) {
    DampedSystem sys;
    sys.alpha = alpha;
    return select_top_k_ir(g, k, sys);
}

}  // namespace influmax
