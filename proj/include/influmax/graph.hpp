#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "influmax/common.hpp"

namespace influmax {

inline constexpr double kNoProb = -1.0;  // probability not yet assigned

/// One input edge; p stays kNoProb until a probability model assigns it.
struct EdgeSpec {
    NodeId u = 0;
    NodeId v = 0;
    double p = kNoProb;
};

using EdgeList = std::vector<EdgeSpec>;

/// Immutable directed graph in CSR form with per-edge propagation
/// probabilities and a reverse index for in-neighbor scans.
class Graph {
  public:
    Graph() = default;

    NodeId node_count() const { return n_; }
    std::uint64_t edge_count() const { return targets_.size(); }
    bool from_undirected() const { return from_undirected_; }

    std::uint32_t out_degree(NodeId u) const {
        return static_cast<std::uint32_t>(offsets_[u + 1] - offsets_[u]);
    }
    std::uint32_t in_degree(NodeId v) const {
        return static_cast<std::uint32_t>(in_offsets_[v + 1] - in_offsets_[v]);
    }

    std::span<const NodeId> out_neighbors(NodeId u) const {
        return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
    }
    std::span<const double> out_probs(NodeId u) const {
        return {probs_.data() + offsets_[u], probs_.data() + offsets_[u + 1]};
    }
    std::span<const NodeId> in_neighbors(NodeId v) const {
        return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
    }
    /// Forward edge id of each reverse-adjacency entry of v.
    std::span<const EdgeId> in_edge_ids(NodeId v) const {
        return {in_edges_.data() + in_offsets_[v], in_edges_.data() + in_offsets_[v + 1]};
    }

    std::uint64_t out_begin(NodeId u) const { return offsets_[u]; }
    std::uint64_t out_end(NodeId u) const { return offsets_[u + 1]; }
    NodeId edge_target(EdgeId e) const { return targets_[e]; }
    double edge_prob(EdgeId e) const { return probs_[e]; }

    // Raw CSR arrays for the sweep kernels.
    const std::uint64_t* offsets_data() const { return offsets_.data(); }
    const NodeId* targets_data() const { return targets_.data(); }
    const double* probs_data() const { return probs_.data(); }

    /// Copy of this graph with the probability of every edge (in CSR order)
    /// replaced. Values must lie in [0,1].
    Graph with_probabilities(std::vector<double> probs) const;

    /// True once probabilities were supplied (by the input or by a model).
    bool has_probabilities() const { return has_probs_; }

  private:
    NodeId n_ = 0;
    std::vector<std::uint64_t> offsets_;      // n+1
    std::vector<NodeId> targets_;
    std::vector<double> probs_;
    std::vector<std::uint64_t> in_offsets_;   // n+1
    std::vector<NodeId> in_sources_;
    std::vector<EdgeId> in_edges_;
    bool from_undirected_ = false;
    bool has_probs_ = false;

    friend Graph build_graph(const EdgeList& edges, bool directed, NodeId min_node_count);
};

/// Builds the CSR graph from an edge list. Undirected input materializes both
/// arcs. Self-loops are dropped; parallel edges merge by noisy-or
/// p = 1 - (1-p1)(1-p2) (a missing probability counts as 0). node_count is
/// 1 + max id, or min_node_count if larger.
Graph build_graph(const EdgeList& edges, bool directed, NodeId min_node_count = 0);

struct ProbabilityModel {
    enum class Kind { WeightedCascade, Trivalency, Bivalency, Uniform, FromFile };

    Kind kind = Kind::WeightedCascade;
    int bivalency_level = 1;    // one of {1,2,4,8,16}
    double uniform_p = 0.1;
    std::uint64_t rng_seed = 0;

    static ProbabilityModel weighted_cascade();
    static ProbabilityModel trivalency(std::uint64_t seed);
    static ProbabilityModel bivalency(int level, std::uint64_t seed);
    static ProbabilityModel uniform(double p);
    static ProbabilityModel from_file();

    /// Parses "wc" | "tr" | "bivalency:<i>" | "uniform:<p>" | "file".
    static ProbabilityModel parse(const std::string& text, std::uint64_t seed);

    std::string label() const;
};

/// Returns a copy of g with edge probabilities assigned by the model.
/// WC: P_uv = 1/in_degree(v). TR: uniform over {0.1, 0.01, 0.001}.
/// Bivalency(i): uniform over {0.01*i, 0.001*i}. Sampling is deterministic
/// given the model's rng_seed. FromFile keeps the probabilities as loaded.
Graph assign_probabilities(const Graph& g, const ProbabilityModel& model);

}  // namespace influmax
