#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "influmax/graph.hpp"
#include "influmax/rng.hpp"

namespace influmax {

/// Result of one Monte-Carlo diffusion run. For plain IC the positive and
/// negative partitions stay empty; for IC-N they partition `activated`.
/// All three are sorted by node id.
struct CascadeOutcome {
    std::vector<NodeId> activated;
    std::vector<NodeId> positive;
    std::vector<NodeId> negative;
};

struct DiffusionModel {
    enum class Kind { IC, ICN };
    Kind kind = Kind::IC;
    double q = 0.9;  // quality factor, ICN only

    static DiffusionModel ic() { return {Kind::IC, 0.0}; }
    static DiffusionModel icn(double q) { return {Kind::ICN, q}; }
};

struct SpreadEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint32_t runs = 0;
    // IC-N only:
    double mean_positive = 0.0;
    double mean_negative = 0.0;
    double std_error_positive = 0.0;
    double std_error_negative = 0.0;
};

/// One IC cascade. Each newly activated node gets exactly one activation
/// attempt per still-inactive out-neighbor, succeeding with the edge
/// probability; the process stops when a step activates nothing.
CascadeOutcome simulate_ic(const Graph& g, std::span<const NodeId> seeds, const RunStream& stream);

/// One IC-N cascade. Seeds start positive with probability q, else negative.
/// Each step, every neutral node processes its just-activated in-neighbors in
/// a uniformly random order; the first successful trial fixes its state
/// (negative activator -> negative; positive activator -> positive w.p. q).
CascadeOutcome simulate_icn(const Graph& g, std::span<const NodeId> seeds, double q,
                            const RunStream& stream);

/// Mean spread and standard error over `runs` independent cascades. Run j
/// draws its stream from (base_seed, j), so the estimate is reproducible and
/// independent of execution order; runs fan out across hardware threads.
SpreadEstimate estimate_spread(const Graph& g, std::span<const NodeId> seeds,
                               const DiffusionModel& model, std::uint32_t runs,
                               std::uint64_t base_seed);

/// Exact expected spread by live-edge enumeration (2^|E| subsets).
/// Tractable only for tiny instances; throws SizeError above 25 edges.
double exact_sigma(const Graph& g, std::span<const NodeId> seeds);

/// Exact (sigma_P, sigma_N) for IC-N by exhaustive expectation over seed
/// states, activator permutations and trial outcomes. Same size limit.
std::pair<double, double> exact_sigma_icn(const Graph& g, std::span<const NodeId> seeds, double q);

}  // namespace influmax
