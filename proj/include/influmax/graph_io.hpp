#pragma once

#include <string>

#include "influmax/graph.hpp"

namespace influmax {

/// Reads a SNAP-style edge list: whitespace-separated "u v" or "u v p" lines,
/// '#' starts a comment line. Throws ParseError with the 1-based line number
/// on malformed input, ValidationError if p is outside [0,1].
EdgeList load_snap_edgelist(const std::string& path);

/// Writes the graph back out in the same format ("u v" or "u v p").
/// Probabilities round-trip exactly.
void write_edgelist(const Graph& g, const std::string& path, bool with_probs);

}  // namespace influmax
