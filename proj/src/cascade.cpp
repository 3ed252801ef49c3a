#include "influmax/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace influmax {

namespace {

void check_seeds(const Graph& g, std::span<const NodeId> seeds) {
    if (seeds.empty()) throw ValidationError("seed set is empty");
    for (NodeId s : seeds) {
        if (s >= g.node_count()) {
            throw ValidationError("seed id " + std::to_string(s) + " out of range");
        }
    }
}

// Reusable per-thread scratch. Epoch stamping makes per-run reset O(1).
struct Workspace {
    std::vector<std::uint32_t> active_at;   // == epoch -> activated
    std::vector<std::uint8_t> is_positive;  // valid when activated
    std::vector<std::uint32_t> seen_at;     // per-step candidate dedup
    std::vector<std::uint32_t> front_at;    // per-step frontier membership
    std::vector<NodeId> frontier, next, cand;
    std::vector<std::pair<NodeId, EdgeId>> activators;
    std::uint32_t epoch = 0;
    std::uint32_t tick = 0;

    explicit Workspace(NodeId n)
        : active_at(n, 0), is_positive(n, 0), seen_at(n, 0), front_at(n, 0) {}
};

std::uint32_t run_ic(const Graph& g, std::span<const NodeId> seeds, const RunStream& stream,
                     Workspace& ws, std::vector<NodeId>* activated_out) {
    const std::uint32_t epoch = ++ws.epoch;
    ws.frontier.clear();
    std::uint32_t count = 0;
    for (NodeId s : seeds) {
        if (ws.active_at[s] == epoch) continue;
        ws.active_at[s] = epoch;
        ws.frontier.push_back(s);
        ++count;
    }
    while (!ws.frontier.empty()) {
        ws.next.clear();
        for (NodeId u : ws.frontier) {
            for (std::uint64_t e = g.out_begin(u); e < g.out_end(u); ++e) {
                const NodeId v = g.edge_target(e);
                if (ws.active_at[v] == epoch) continue;
                if (stream.edge_trial(static_cast<EdgeId>(e)) < g.edge_prob(e)) {
                    ws.active_at[v] = epoch;
                    ws.next.push_back(v);
                    ++count;
                }
            }
        }
        ws.frontier.swap(ws.next);
    }
    if (activated_out) {
        activated_out->clear();
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (ws.active_at[v] == epoch) activated_out->push_back(v);
        }
    }
    return count;
}

std::pair<std::uint32_t, std::uint32_t> run_icn(const Graph& g, std::span<const NodeId> seeds,
                                                double q, const RunStream& stream, Workspace& ws,
                                                CascadeOutcome* outcome) {
    const std::uint32_t epoch = ++ws.epoch;
    ws.frontier.clear();
    std::uint32_t pos_count = 0, neg_count = 0;
    for (NodeId s : seeds) {
        if (ws.active_at[s] == epoch) continue;
        ws.active_at[s] = epoch;
        const bool positive = stream.quality_draw(s) < q;
        ws.is_positive[s] = positive;
        positive ? ++pos_count : ++neg_count;
        ws.frontier.push_back(s);
    }

    for (std::uint32_t step = 1; !ws.frontier.empty(); ++step) {
        const std::uint32_t tick = ++ws.tick;
        ws.cand.clear();
        for (NodeId u : ws.frontier) ws.front_at[u] = tick;
        for (NodeId u : ws.frontier) {
            for (NodeId v : g.out_neighbors(u)) {
                if (ws.active_at[v] == epoch || ws.seen_at[v] == tick) continue;
                ws.seen_at[v] = tick;
                ws.cand.push_back(v);
            }
        }
        ws.next.clear();
        for (NodeId v : ws.cand) {
            auto sources = g.in_neighbors(v);
            auto edge_ids = g.in_edge_ids(v);
            ws.activators.clear();
            for (std::size_t i = 0; i < sources.size(); ++i) {
                if (ws.front_at[sources[i]] == tick) {
                    ws.activators.emplace_back(sources[i], edge_ids[i]);
                }
            }
            // uniformly random processing order over the just-activated
            // in-neighbors (Fisher-Yates keyed on (v, step, i))
            std::uint32_t draw_index = 0;
            for (std::size_t i = ws.activators.size(); i > 1; --i) {
                const std::uint64_t word = stream.shuffle_word(v, step, draw_index++);
                std::swap(ws.activators[i - 1], ws.activators[word % i]);
            }
            for (const auto& [u, e] : ws.activators) {
                if (stream.edge_trial(e) >= g.edge_prob(e)) continue;
                // first successful trial fixes the state
                const bool positive = ws.is_positive[u] && stream.quality_draw(v) < q;
                ws.active_at[v] = epoch;
                ws.is_positive[v] = positive;
                positive ? ++pos_count : ++neg_count;
                ws.next.push_back(v);
                break;
            }
        }
        ws.frontier.swap(ws.next);
    }

    if (outcome) {
        outcome->activated.clear();
        outcome->positive.clear();
        outcome->negative.clear();
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (ws.active_at[v] != epoch) continue;
            outcome->activated.push_back(v);
            (ws.is_positive[v] ? outcome->positive : outcome->negative).push_back(v);
        }
    }
    return {pos_count, neg_count};
}

double stderr_of(std::uint64_t sum, std::uint64_t sum_sq, std::uint32_t runs) {
    if (runs < 2) return 0.0;
    const double mean = static_cast<double>(sum) / runs;
    const double var =
        (static_cast<double>(sum_sq) - runs * mean * mean) / (static_cast<double>(runs) - 1.0);
    return var <= 0.0 ? 0.0 : std::sqrt(var / runs);
}

}  // namespace

CascadeOutcome simulate_ic(const Graph& g, std::span<const NodeId> seeds,
                           const RunStream& stream) {
    check_seeds(g, seeds);
    Workspace ws(g.node_count());
    CascadeOutcome out;
    run_ic(g, seeds, stream, ws, &out.activated);
    return out;
}

CascadeOutcome simulate_icn(const Graph& g, std::span<const NodeId> seeds, double q,
                            const RunStream& stream) {
    check_seeds(g, seeds);
    if (!(q >= 0.0 && q <= 1.0)) throw ValidationError("quality factor q outside [0,1]");
    Workspace ws(g.node_count());
    CascadeOutcome out;
    run_icn(g, seeds, q, stream, ws, &out);
    return out;
}

SpreadEstimate estimate_spread(const Graph& g, std::span<const NodeId> seeds,
                               const DiffusionModel& model, std::uint32_t runs,
                               std::uint64_t base_seed) {
    check_seeds(g, seeds);
    if (runs < 1) throw ValidationError("runs must be >= 1");
    const bool icn = model.kind == DiffusionModel::Kind::ICN;
    if (icn && !(model.q >= 0.0 && model.q <= 1.0)) {
        throw ValidationError("quality factor q outside [0,1]");
    }

    // Per-run counts are integers, so the reduction below is exact and
    // independent of how runs are scheduled across threads.
    std::vector<std::uint32_t> act(runs), pos(icn ? runs : 0), neg(icn ? runs : 0);

    auto worker = [&](std::uint32_t begin, std::uint32_t end) {
        Workspace ws(g.node_count());
        for (std::uint32_t j = begin; j < end; ++j) {
            const RunStream stream = RunStream::for_run(base_seed, j);
            if (icn) {
                auto [p, ng] = run_icn(g, seeds, model.q, stream, ws, nullptr);
                pos[j] = p;
                neg[j] = ng;
                act[j] = p + ng;
            } else {
                act[j] = run_ic(g, seeds, stream, ws, nullptr);
            }
        }
    };

    std::uint32_t threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, runs);
    if (threads <= 1 || runs < 64) {
        worker(0, runs);
    } else {
        std::vector<std::thread> pool;
        const std::uint32_t chunk = (runs + threads - 1) / threads;
        for (std::uint32_t t = 0; t < threads; ++t) {
            const std::uint32_t begin = t * chunk;
            const std::uint32_t end = std::min(runs, begin + chunk);
            if (begin < end) pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    SpreadEstimate est;
    est.runs = runs;
    std::uint64_t sum = 0, sum_sq = 0;
    for (std::uint32_t c : act) {
        sum += c;
        sum_sq += static_cast<std::uint64_t>(c) * c;
    }
    est.mean = static_cast<double>(sum) / runs;
    est.std_error = stderr_of(sum, sum_sq, runs);
    if (icn) {
        std::uint64_t psum = 0, psq = 0, nsum = 0, nsq = 0;
        for (std::uint32_t c : pos) {
            psum += c;
            psq += static_cast<std::uint64_t>(c) * c;
        }
        for (std::uint32_t c : neg) {
            nsum += c;
            nsq += static_cast<std::uint64_t>(c) * c;
        }
        est.mean_positive = static_cast<double>(psum) / runs;
        est.mean_negative = static_cast<double>(nsum) / runs;
        est.std_error_positive = stderr_of(psum, psq, runs);
        est.std_error_negative = stderr_of(nsum, nsq, runs);
    }
    return est;
}

}  // namespace influmax
