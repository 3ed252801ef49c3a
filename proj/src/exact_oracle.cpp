#include <algorithm>
#include <cmath>
#include <vector>

#include "influmax/cascade.hpp"

namespace influmax {

namespace {

constexpr std::uint64_t kMaxOracleEdges = 25;

struct OracleEdge {
    NodeId u, v;
    double p;
};

void check_oracle_size(const Graph& g) {
    if (g.edge_count() > kMaxOracleEdges) {
        throw SizeError("exact oracle limited to " + std::to_string(kMaxOracleEdges) +
                        " edges, graph has " + std::to_string(g.edge_count()));
    }
}

}  // namespace

double exact_sigma(const Graph& g, std::span<const NodeId> seeds) {
    if (seeds.empty()) throw ValidationError("seed set is empty");
    for (NodeId s : seeds) {
        if (s >= g.node_count()) throw ValidationError("seed id out of range");
    }
    check_oracle_size(g);

    std::vector<OracleEdge> certain, stochastic;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        auto targets = g.out_neighbors(u);
        auto probs = g.out_probs(u);
        for (std::size_t i = 0; i < targets.size(); ++i) {
            if (probs[i] >= 1.0) {
                certain.push_back({u, targets[i], 1.0});
            } else if (probs[i] > 0.0) {
                stochastic.push_back({u, targets[i], probs[i]});
            }
        }
    }

    const std::size_t s = stochastic.size();
    const NodeId n = g.node_count();
    std::vector<std::uint32_t> visit(n, 0);
    std::uint32_t epoch = 0;
    std::vector<NodeId> stack;

    double total = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
        double weight = 1.0;
        for (std::size_t i = 0; i < s; ++i) {
            weight *= (mask >> i) & 1 ? stochastic[i].p : 1.0 - stochastic[i].p;
        }
        if (weight == 0.0) continue;

        ++epoch;
        stack.clear();
        std::uint32_t count = 0;
        for (NodeId sd : seeds) {
            if (visit[sd] == epoch) continue;
            visit[sd] = epoch;
            stack.push_back(sd);
            ++count;
        }
        bool grew = true;
        while (grew) {  // tiny edge sets; relaxation sweep is simplest
            grew = false;
            for (const OracleEdge& e : certain) {
                if (visit[e.u] == epoch && visit[e.v] != epoch) {
                    visit[e.v] = epoch;
                    ++count;
                    grew = true;
                }
            }
            for (std::size_t i = 0; i < s; ++i) {
                if (!((mask >> i) & 1)) continue;
                const OracleEdge& e = stochastic[i];
                if (visit[e.u] == epoch && visit[e.v] != epoch) {
                    visit[e.v] = epoch;
                    ++count;
                    grew = true;
                }
            }
        }
        total += weight * count;
    }
    return total;
}

namespace {

// Full expectation over the IC-N process tree: seed sign assignments,
// per-candidate activator permutations, trial outcomes and quality draws.
struct IcnOracle {
    const Graph& g;
    double q;
    std::vector<std::int8_t> state;  // 0 neutral, 1 positive, 2 negative
    double expected_pos = 0.0;
    double expected_neg = 0.0;

    IcnOracle(const Graph& graph, double quality)
        : g(graph), q(quality), state(graph.node_count(), 0) {}

    struct Outcome {
        double stay_neutral, become_pos, become_neg;
    };

    Outcome candidate_outcome(const std::vector<std::pair<NodeId, double>>& acts) {
        Outcome out{0.0, 0.0, 0.0};
        std::vector<std::size_t> order(acts.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        double perms = 0.0;
        do {
            perms += 1.0;
            double prefix = 1.0;
            for (std::size_t idx : order) {
                const auto& [u, p] = acts[idx];
                const double first_here = prefix * p;
                if (state[u] == 2) {
                    out.become_neg += first_here;
                } else {
                    out.become_pos += first_here * q;
                    out.become_neg += first_here * (1.0 - q);
                }
                prefix *= 1.0 - p;
            }
            out.stay_neutral += prefix;
        } while (std::next_permutation(order.begin(), order.end()));
        out.stay_neutral /= perms;
        out.become_pos /= perms;
        out.become_neg /= perms;
        return out;
    }

    void step(const std::vector<NodeId>& frontier, double prob, std::uint32_t pos,
              std::uint32_t neg) {
        if (frontier.empty()) {
            expected_pos += prob * pos;
            expected_neg += prob * neg;
            return;
        }
        // neutral nodes adjacent to the frontier, each resolved independently
        std::vector<NodeId> cands;
        for (NodeId u : frontier) {
            for (NodeId v : g.out_neighbors(u)) {
                if (state[v] == 0 && std::find(cands.begin(), cands.end(), v) == cands.end()) {
                    cands.push_back(v);
                }
            }
        }
        std::sort(cands.begin(), cands.end());

        std::vector<Outcome> outs;
        outs.reserve(cands.size());
        for (NodeId v : cands) {
            std::vector<std::pair<NodeId, double>> acts;
            auto sources = g.in_neighbors(v);
            auto edge_ids = g.in_edge_ids(v);
            for (std::size_t i = 0; i < sources.size(); ++i) {
                const NodeId u = sources[i];
                if (std::find(frontier.begin(), frontier.end(), u) != frontier.end()) {
                    acts.emplace_back(u, g.edge_prob(edge_ids[i]));
                }
            }
            outs.push_back(candidate_outcome(acts));
        }

        std::vector<NodeId> next;
        branch(cands, outs, 0, next, prob, pos, neg);
    }

    void branch(const std::vector<NodeId>& cands, const std::vector<Outcome>& outs,
                std::size_t i, std::vector<NodeId>& next, double prob, std::uint32_t pos,
                std::uint32_t neg) {
        if (prob == 0.0) return;
        if (i == cands.size()) {
            step(next, prob, pos, neg);
            return;
        }
        const NodeId v = cands[i];
        const Outcome& o = outs[i];
        if (o.stay_neutral > 0.0) {
            branch(cands, outs, i + 1, next, prob * o.stay_neutral, pos, neg);
        }
        if (o.become_pos > 0.0) {
            state[v] = 1;
            next.push_back(v);
            branch(cands, outs, i + 1, next, prob * o.become_pos, pos + 1, neg);
            next.pop_back();
            state[v] = 0;
        }
        if (o.become_neg > 0.0) {
            state[v] = 2;
            next.push_back(v);
            branch(cands, outs, i + 1, next, prob * o.become_neg, pos, neg + 1);
            next.pop_back();
            state[v] = 0;
        }
    }

    void seed_signs(std::span<const NodeId> seeds, std::size_t i, std::vector<NodeId>& frontier,
                    double prob, std::uint32_t pos, std::uint32_t neg) {
        if (prob == 0.0) return;
        if (i == seeds.size()) {
            step(frontier, prob, pos, neg);
            return;
        }
        const NodeId s = seeds[i];
        state[s] = 1;
        seed_signs(seeds, i + 1, frontier, prob * q, pos + 1, neg);
        state[s] = 2;
        seed_signs(seeds, i + 1, frontier, prob * (1.0 - q), pos, neg + 1);
        state[s] = 0;
    }
};

}  // namespace

std::pair<double, double> exact_sigma_icn(const Graph& g, std::span<const NodeId> seeds,
                                          double q) {
    if (seeds.empty()) throw ValidationError("seed set is empty");
    for (NodeId s : seeds) {
        if (s >= g.node_count()) throw ValidationError("seed id out of range");
    }
    if (!(q >= 0.0 && q <= 1.0)) throw ValidationError("quality factor q outside [0,1]");
    check_oracle_size(g);

    IcnOracle oracle(g, q);
    std::vector<NodeId> frontier(seeds.begin(), seeds.end());
    oracle.seed_signs(seeds, 0, frontier, 1.0, 0, 0);
    return {oracle.expected_pos, oracle.expected_neg};
}

}  // namespace influmax
