#include "influmax/irie.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "influmax/kernels.hpp"
#include "influmax/rank.hpp"

namespace influmax {

MioaTree compute_mioa(const Graph& g, NodeId s, double theta) {
    if (s >= g.node_count()) throw ValidationError("root id out of range");
    if (!(theta > 0.0 && theta < 1.0)) throw ValidationError("theta must lie in (0,1)");

    MioaTree tree;
    tree.root = s;
    tree.theta = theta;

    // Dijkstra maximizing path probability; pop order (prob desc, id asc)
    // keeps settling deterministic.
    struct Entry {
        double prob;
        NodeId node;
        NodeId parent;
    };
    auto worse = [](const Entry& a, const Entry& b) {
        if (a.prob != b.prob) return a.prob < b.prob;
        return a.node > b.node;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> queue(worse);

    std::vector<double> best(g.node_count(), 0.0);
    std::vector<NodeId> via(g.node_count(), s);
    std::vector<std::uint8_t> settled(g.node_count(), 0);

    best[s] = 1.0;
    queue.push({1.0, s, s});
    while (!queue.empty()) {
        const Entry top = queue.top();
        queue.pop();
        if (settled[top.node] || top.prob < best[top.node]) continue;
        settled[top.node] = 1;
        tree.nodes.push_back(top.node);
        tree.path_prob.push_back(best[top.node]);
        tree.parent.push_back(via[top.node]);

        auto targets = g.out_neighbors(top.node);
        auto probs = g.out_probs(top.node);
        for (std::size_t i = 0; i < targets.size(); ++i) {
            const NodeId v = targets[i];
            if (settled[v] || probs[i] <= 0.0) continue;
            const double cand = best[top.node] * probs[i];
            if (cand < theta) continue;
            if (cand > best[v]) {
                best[v] = cand;
                via[v] = top.node;
                queue.push({cand, v, top.node});
            } else if (cand == best[v] && top.node < via[v]) {
                via[v] = top.node;  // equal-probability tie: smaller parent id
            }
        }
    }
    return tree;
}

ActivationProb estimate_ap(const Graph& g, std::span<const NodeId> seeds, double theta) {
    if (seeds.empty()) throw ValidationError("seed set is empty");
    ActivationProb out;
    out.seeds.assign(seeds.begin(), seeds.end());
    out.ap.assign(g.node_count(), 0.0);
    for (NodeId s : seeds) {
        const MioaTree tree = compute_mioa(g, s, theta);
        for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
            out.ap[tree.nodes[i]] += tree.path_prob[i];
        }
    }
    for (double& a : out.ap) a = std::min(1.0, a);
    for (NodeId s : seeds) out.ap[s] = 1.0;
    return out;
}

namespace {

void check_k(const Graph& g, std::uint32_t k) {
    if (g.node_count() == 0) throw ValidationError("graph is empty");
    if (k < 1 || k > g.node_count()) throw ValidationError("k out of range");
}

NodeId argmax_excluding(const std::vector<double>& score,
                        const std::vector<std::uint8_t>& taken) {
    NodeId best = 0;
    double best_score = -1.0;
    bool found = false;
    for (NodeId u = 0; u < score.size(); ++u) {
        if (taken[u]) continue;
        if (!found || score[u] > best_score) {
            found = true;
            best = u;
            best_score = score[u];
        }
    }
    return best;
}

// Folds one seed's tree into the raw AP sums and refreshes the damping
// vector damp = 1 - min(1, ap), with damp = 0 on seeds.
void fold_seed_tree(const Graph& g, NodeId seed, double theta, std::vector<double>& ap_raw,
                    const std::vector<std::uint8_t>& taken, std::vector<double>& damp) {
    const MioaTree tree = compute_mioa(g, seed, theta);
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
        ap_raw[tree.nodes[i]] += tree.path_prob[i];
    }
    for (NodeId u = 0; u < g.node_count(); ++u) {
        damp[u] = taken[u] ? 0.0 : 1.0 - std::min(1.0, ap_raw[u]);
    }
}

}  // namespace

SeedSet irie_select(const Graph& g, std::uint32_t k, const IrieParams& params) {
    check_k(g, k);
    const NodeId n = g.node_count();

    std::vector<double> r(n, 1.0);
    std::vector<double> scratch;
    std::vector<double> damp;  // empty on round one: AP is identically 0
    std::vector<double> ap_raw(n, 0.0);
    std::vector<std::uint8_t> taken(n, 0);

    SeedSet out;
    for (std::uint32_t round = 0; round < k; ++round) {
        const std::uint32_t iters =
            round == 0 ? params.first_round_iters : params.later_round_iters;
        detail::damped_rank_iteration(g, params.alpha, iters, params.tol,
                                      damp.empty() ? nullptr : damp.data(), r, scratch);
        const NodeId pick = argmax_excluding(r, taken);
        out.nodes.push_back(pick);
        out.scores.push_back(r[pick]);
        taken[pick] = 1;
        if (out.nodes.size() == k) break;
        if (damp.empty()) damp.assign(n, 1.0);
        fold_seed_tree(g, pick, params.theta, ap_raw, taken, damp);
    }
    return out;
}

namespace {

struct IcnBuffers {
    std::vector<double> gp2, gn2, h2;
};

std::pair<std::uint32_t, bool> icn_iteration(const Graph& g, double alpha, double q,
                                             std::uint32_t max_iters, double tol,
                                             const double* damp, std::vector<double>& gp,
                                             std::vector<double>& gn, std::vector<double>& h,
                                             IcnBuffers& buf) {
    const auto& kern = kernels::active();
    const NodeId n = g.node_count();
    buf.gp2.resize(n);
    buf.gn2.resize(n);
    buf.h2.resize(n);
    std::uint32_t iters = 0;
    bool converged = false;
    while (iters < max_iters) {
        kern.icn_sweep(g.offsets_data(), g.targets_data(), g.probs_data(), n, alpha, q, damp,
                       gp.data(), gn.data(), h.data(), buf.gp2.data(), buf.gn2.data(),
                       buf.h2.data());
        double diff = kern.max_abs_diff(gp.data(), buf.gp2.data(), n);
        diff = std::max(diff, kern.max_abs_diff(gn.data(), buf.gn2.data(), n));
        diff = std::max(diff, kern.max_abs_diff(h.data(), buf.h2.data(), n));
        gp.swap(buf.gp2);
        gn.swap(buf.gn2);
        h.swap(buf.h2);
        ++iters;
        if (kern.max_abs(h.data(), n) > kDivergenceGuard ||
            kern.max_abs(gp.data(), n) > kDivergenceGuard) {
            throw DivergenceError("icn rank iteration exceeded overflow guard at alpha=" +
                                  std::to_string(alpha) + "; lower alpha");
        }
        if (diff < tol || diff == 0.0) {
            converged = true;
            break;
        }
    }
    return {iters, converged};
}

}  // namespace

IcnRankTriple icn_rank_scores(const Graph& g, double q, double alpha, std::uint32_t max_iters,
                              double tol) {
    if (g.node_count() == 0) throw ValidationError("graph is empty");
    if (!(q >= 0.0 && q <= 1.0)) throw ValidationError("q outside [0,1]");
    IcnRankTriple out;
    out.q = q;
    const NodeId n = g.node_count();
    out.gp.assign(n, q);
    out.gn.assign(n, 1.0 - q);
    out.h.assign(n, 1.0);
    IcnBuffers buf;
    auto [iters, converged] =
        icn_iteration(g, alpha, q, max_iters, tol, nullptr, out.gp, out.gn, out.h, buf);
    out.iterations = iters;
    out.converged = converged;
    return out;
}

SeedSet irie_n_select(const Graph& g, std::uint32_t k, const IrieNParams& params) {
    check_k(g, k);
    if (!(params.q >= 0.0 && params.q <= 1.0)) throw ValidationError("q outside [0,1]");
    if (params.lambda < 0.0) throw ValidationError("lambda must be >= 0");
    const NodeId n = g.node_count();

    std::vector<double> gp(n, params.q), gn(n, 1.0 - params.q), h(n, 1.0);
    IcnBuffers buf;
    std::vector<double> damp;
    std::vector<double> ap_raw(n, 0.0);
    std::vector<std::uint8_t> taken(n, 0);
    std::vector<double> objective(n);

    SeedSet out;
    for (std::uint32_t round = 0; round < k; ++round) {
        const std::uint32_t max_iters =
            round == 0 ? params.first_round_iters : params.later_round_iters;
        icn_iteration(g, params.alpha, params.q, max_iters, params.tol,
                      damp.empty() ? nullptr : damp.data(), gp, gn, h, buf);
        for (NodeId u = 0; u < n; ++u) objective[u] = gp[u] - params.lambda * gn[u];
        const NodeId pick = argmax_excluding(objective, taken);
        out.nodes.push_back(pick);
        out.scores.push_back(objective[pick]);
        taken[pick] = 1;
        if (out.nodes.size() == k) break;
        if (damp.empty()) damp.assign(n, 1.0);
        fold_seed_tree(g, pick, params.theta, ap_raw, taken, damp);
    }
    return out;
}

}  // namespace influmax
