#include "influmax/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

#include "influmax/rng.hpp"

namespace influmax {

Graph build_graph(const EdgeList& edges, bool directed, NodeId min_node_count) {
    std::vector<EdgeSpec> work;
    work.reserve(directed ? edges.size() : 2 * edges.size());
    for (const EdgeSpec& e : edges) {
        if (e.p != kNoProb && (e.p < 0.0 || e.p > 1.0)) {
            throw ValidationError("edge probability outside [0,1]");
        }
        if (e.u == e.v) continue;  // self-loops dropped
        work.push_back(e);
        if (!directed) work.push_back({e.v, e.u, e.p});
    }

    // Canonical order makes the build independent of input permutation,
    // including the noisy-or merge of parallel edges.
    std::sort(work.begin(), work.end(), [](const EdgeSpec& a, const EdgeSpec& b) {
        if (a.u != b.u) return a.u < b.u;
        if (a.v != b.v) return a.v < b.v;
        return a.p < b.p;
    });

    std::vector<EdgeSpec> merged;
    merged.reserve(work.size());
    for (std::size_t i = 0; i < work.size();) {
        std::size_t j = i;
        int prob_count = 0;
        double single = kNoProb;
        double miss = 1.0;  // product of (1 - p) over the parallel group
        while (j < work.size() && work[j].u == work[i].u && work[j].v == work[i].v) {
            if (work[j].p != kNoProb) {
                ++prob_count;
                single = work[j].p;
                miss *= 1.0 - work[j].p;
            }
            ++j;
        }
        // a lone probability is kept bit-exact; only true parallels noisy-or
        const double p = prob_count == 0 ? kNoProb : (prob_count == 1 ? single : 1.0 - miss);
        merged.push_back({work[i].u, work[i].v, p});
        i = j;
    }

    NodeId n = min_node_count;
    for (const EdgeSpec& e : edges) {  // self-loop ids still name nodes
        n = std::max({n, e.u + 1, e.v + 1});
    }

    Graph g;
    g.n_ = n;
    g.from_undirected_ = !directed;
    for (const EdgeSpec& e : merged) {
        if (e.p != kNoProb) {
            g.has_probs_ = true;
            break;
        }
    }
    g.offsets_.assign(n + 1, 0);
    g.targets_.resize(merged.size());
    g.probs_.resize(merged.size());
    for (const EdgeSpec& e : merged) g.offsets_[e.u + 1]++;
    for (NodeId u = 0; u < n; ++u) g.offsets_[u + 1] += g.offsets_[u];
    {
        std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
        for (const EdgeSpec& e : merged) {
            std::uint64_t at = cursor[e.u]++;
            g.targets_[at] = e.v;
            g.probs_[at] = e.p == kNoProb ? 0.0 : e.p;
        }
    }

    // Reverse index: stable counting sort by target keeps sources ascending.
    g.in_offsets_.assign(n + 1, 0);
    g.in_sources_.resize(merged.size());
    g.in_edges_.resize(merged.size());
    for (NodeId v : g.targets_) g.in_offsets_[v + 1]++;
    for (NodeId v = 0; v < n; ++v) g.in_offsets_[v + 1] += g.in_offsets_[v];
    {
        std::vector<std::uint64_t> cursor(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
        for (NodeId u = 0; u < n; ++u) {
            for (std::uint64_t e = g.offsets_[u]; e < g.offsets_[u + 1]; ++e) {
                std::uint64_t at = cursor[g.targets_[e]]++;
                g.in_sources_[at] = u;
                g.in_edges_[at] = static_cast<EdgeId>(e);
            }
        }
    }
    return g;
}

Graph Graph::with_probabilities(std::vector<double> probs) const {
    if (probs.size() != probs_.size()) {
        throw ValidationError("probability vector size does not match edge count");
    }
    for (double p : probs) {
        if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("edge probability outside [0,1]");
    }
    Graph g = *this;
    g.probs_ = std::move(probs);
    g.has_probs_ = true;
    return g;
}

ProbabilityModel ProbabilityModel::weighted_cascade() {
    return {Kind::WeightedCascade, 1, 0.0, 0};
}
ProbabilityModel ProbabilityModel::trivalency(std::uint64_t seed) {
    return {Kind::Trivalency, 1, 0.0, seed};
}
ProbabilityModel ProbabilityModel::bivalency(int level, std::uint64_t seed) {
    ProbabilityModel m{Kind::Bivalency, level, 0.0, seed};
    if (level != 1 && level != 2 && level != 4 && level != 8 && level != 16) {
        throw ValidationError("bivalency level must be one of {1,2,4,8,16}");
    }
    return m;
}
ProbabilityModel ProbabilityModel::uniform(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("uniform probability outside [0,1]");
    return {Kind::Uniform, 1, p, 0};
}
ProbabilityModel ProbabilityModel::from_file() {
    return {Kind::FromFile, 1, 0.0, 0};
}

ProbabilityModel ProbabilityModel::parse(const std::string& text, std::uint64_t seed) {
    if (text == "wc") return weighted_cascade();
    if (text == "tr") return trivalency(seed);
    if (text == "file") return from_file();
    if (text.rfind("bivalency:", 0) == 0) {
        return bivalency(std::stoi(text.substr(10)), seed);
    }
    if (text.rfind("uniform:", 0) == 0) {
        return uniform(std::stod(text.substr(8)));
    }
    throw ValidationError("unknown probability model '" + text + "'");
}

std::string ProbabilityModel::label() const {
    switch (kind) {
        case Kind::WeightedCascade: return "wc";
        case Kind::Trivalency: return "tr";
        case Kind::Bivalency: return "bivalency:" + std::to_string(bivalency_level);
        case Kind::Uniform: {
            char buf[48];
            std::snprintf(buf, sizeof buf, "uniform:%g", uniform_p);
            return buf;
        }
        case Kind::FromFile: return "file";
    }
    return "?";
}

Graph assign_probabilities(const Graph& g, const ProbabilityModel& model) {
    const std::uint64_t m = g.edge_count();
    std::vector<double> probs(m);

    switch (model.kind) {
        case ProbabilityModel::Kind::FromFile:
            return g;
        case ProbabilityModel::Kind::WeightedCascade: {
            for (NodeId u = 0; u < g.node_count(); ++u) {
                auto targets = g.out_neighbors(u);
                for (std::size_t i = 0; i < targets.size(); ++i) {
                    probs[g.out_begin(u) + i] = 1.0 / g.in_degree(targets[i]);
                }
            }
            break;
        }
        case ProbabilityModel::Kind::Uniform: {
            std::fill(probs.begin(), probs.end(), model.uniform_p);
            break;
        }
        case ProbabilityModel::Kind::Trivalency: {
            static constexpr double levels[3] = {0.1, 0.01, 0.001};
            std::mt19937_64 rng(model.rng_seed);
            for (std::uint64_t e = 0; e < m; ++e) probs[e] = levels[bounded_draw(rng, 3)];
            break;
        }
        case ProbabilityModel::Kind::Bivalency: {
            const double hi = 0.01 * model.bivalency_level;
            const double lo = 0.001 * model.bivalency_level;
            std::mt19937_64 rng(model.rng_seed);
            for (std::uint64_t e = 0; e < m; ++e) probs[e] = bounded_draw(rng, 2) ? lo : hi;
            break;
        }
    }
    return g.with_probabilities(std::move(probs));
}

}  // namespace influmax
