#pragma once

#include <cstdint>

#include "influmax/graph.hpp"

namespace influmax {

/// Synthetic directed power-law graph: out-degrees drawn from a truncated
/// power law with the given exponent, targets uniform without self-loops or
/// duplicates (configuration-model style). Total edge count is pinned to
/// round(n * avg_degree). Bit-reproducible for a fixed seed. Probabilities
/// are left unassigned.
Graph generate_power_law(NodeId n, double avg_degree, double exponent, std::uint64_t seed);

inline Graph generate_power_law(NodeId n, double avg_degree, std::uint64_t seed) {
    return generate_power_law(n, avg_degree, 2.5, seed);
}

}  // namespace influmax
