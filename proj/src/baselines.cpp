#include "influmax/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

#include "influmax/cascade.hpp"
#include "influmax/kernels.hpp"
#include "influmax/rng.hpp"

namespace influmax {

namespace {

void check_k(const Graph& g, std::uint32_t k) {
    if (g.node_count() == 0) throw ValidationError("graph is empty");
    if (k < 1 || k > g.node_count()) throw ValidationError("k out of range");
}

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

SeedSet select_degree(const Graph& g, std::uint32_t k) {
    check_k(g, k);
    std::vector<double> score(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) {
        // influence flows outward; undirected builds count the full degree
        score[u] = g.from_undirected() ? g.out_degree(u) + g.in_degree(u) : g.out_degree(u);
    }
    return top_k_by_score(score, k);
}

RankVector pagerank_scores(const Graph& g, const PageRankConfig& cfg) {
    if (g.node_count() == 0) throw ValidationError("graph is empty");
    if (!(cfg.jump > 0.0 && cfg.jump < 1.0)) throw ValidationError("jump outside (0,1)");
    const NodeId n = g.node_count();
    const auto& kern = kernels::active();

    // Transition weight along influence edge (v,u), i.e. surfer move u -> v:
    // TP = P_vu / sum of in-probabilities of u. Arranged on the forward CSR
    // so one spmv per iteration gathers every node's incoming transition mass.
    std::vector<double> in_mass(n, 0.0);
    for (NodeId u = 0; u < n; ++u) {
        auto targets = g.out_neighbors(u);
        auto probs = g.out_probs(u);
        for (std::size_t i = 0; i < targets.size(); ++i) in_mass[targets[i]] += probs[i];
    }
    std::vector<double> tw(g.edge_count(), 0.0);
    for (NodeId v = 0; v < n; ++v) {
        auto targets = g.out_neighbors(v);
        auto probs = g.out_probs(v);
        for (std::size_t i = 0; i < targets.size(); ++i) {
            const NodeId u = targets[i];
            if (probs[i] > 0.0) tw[g.out_begin(v) + i] = probs[i] / in_mass[u];
        }
    }
    std::vector<std::uint8_t> dangling(n, 0);
    for (NodeId u = 0; u < n; ++u) dangling[u] = in_mass[u] <= 0.0;

    RankVector out;
    out.r.assign(n, 1.0 / n);
    std::vector<double> next(n);
    while (out.iterations < cfg.max_iters) {
        kern.spmv(g.offsets_data(), g.targets_data(), tw.data(), n, out.r.data(), next.data());
        double dangling_mass = 0.0;
        for (NodeId u = 0; u < n; ++u) {
            if (dangling[u]) dangling_mass += out.r[u];
        }
        const double base = cfg.jump / n + (1.0 - cfg.jump) * dangling_mass / n;
        for (NodeId v = 0; v < n; ++v) next[v] = base + (1.0 - cfg.jump) * next[v];
        const double diff = kern.max_abs_diff(out.r.data(), next.data(), n);
        out.r.swap(next);
        ++out.iterations;
        if (diff < cfg.tol) {
            out.converged = true;
            break;
        }
    }
    return out;
}

SeedSet select_pagerank(const Graph& g, std::uint32_t k, const PageRankConfig& cfg) {
    check_k(g, k);
    return top_k_by_score(pagerank_scores(g, cfg).r, k);
}

namespace {

struct CelfEntry {
    double gain;
    NodeId node;
    std::uint32_t stamp;  // round the gain was computed in
};

struct CelfWorse {
    bool operator()(const CelfEntry& a, const CelfEntry& b) const {
        if (a.gain != b.gain) return a.gain < b.gain;
        return a.node > b.node;  // deterministic pop order on ties
    }
};

class GainEvaluator {
  public:
    GainEvaluator(const Graph& g, const CelfObjective& objective, const CelfEvaluator& eval)
        : g_(g), objective_(objective), eval_(eval) {}

    /// Objective value of a seed set under the round's common random numbers.
    double value(std::span<const NodeId> seeds, std::uint32_t round) const {
        if (eval_.kind == CelfEvaluator::Kind::Exact) {
            if (!objective_.icn) return exact_sigma(g_, seeds);
            auto [p, ng] = exact_sigma_icn(g_, seeds, objective_.q);
            return p - objective_.lambda * ng;
        }
        const std::uint64_t round_seed = detail::mix64(eval_.seed ^ (0xc2b2ae3d27d4eb4fULL + round));
        if (!objective_.icn) {
            return estimate_spread(g_, seeds, DiffusionModel::ic(), eval_.runs, round_seed).mean;
        }
        const SpreadEstimate est =
            estimate_spread(g_, seeds, DiffusionModel::icn(objective_.q), eval_.runs, round_seed);
        return est.mean_positive - objective_.lambda * est.mean_negative;
    }

  private:
    const Graph& g_;
    CelfObjective objective_;
    CelfEvaluator eval_;
};

}  // namespace

SeedSet greedy_celf(const Graph& g, std::uint32_t k, const CelfObjective& objective,
                    const CelfEvaluator& evaluator) {
    check_k(g, k);
    if (objective.icn && !(objective.q >= 0.0 && objective.q <= 1.0)) {
        throw ValidationError("q outside [0,1]");
    }
    const GainEvaluator eval(g, objective, evaluator);

    std::priority_queue<CelfEntry, std::vector<CelfEntry>, CelfWorse> queue;
    std::vector<NodeId> single(1);
    for (NodeId u = 0; u < g.node_count(); ++u) {
        single[0] = u;
        queue.push({eval.value(single, 0), u, 0});
    }

    SeedSet out;
    std::vector<NodeId> with_candidate;
    double current_value = 0.0;  // objective of the empty set
    for (std::uint32_t round = 0; round < k; ++round) {
        if (round > 0) current_value = eval.value(out.nodes, round);
        for (;;) {
            CelfEntry top = queue.top();
            queue.pop();
            if (top.stamp == round) {
                out.nodes.push_back(top.node);
                out.scores.push_back(top.gain);
                break;
            }
            with_candidate = out.nodes;
            with_candidate.push_back(top.node);
            top.gain = eval.value(with_candidate, round) - current_value;
            top.stamp = round;
            queue.push(top);
        }
    }
    return out;
}

}  // namespace influmax
