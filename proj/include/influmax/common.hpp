#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace influmax {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Ordered list of selected seeds plus the per-round score each seed was
/// picked with (rank value, marginal gain, degree, ... depending on the
/// selector).
struct SeedSet {
    std::vector<NodeId> nodes;
    std::vector<double> scores;

    std::size_t size() const { return nodes.size(); }
    bool empty() const { return nodes.empty(); }
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when a fixed-point iteration blows past the overflow guard.
struct DivergenceError : std::runtime_error {
    explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when an exact oracle is asked for an instance it cannot enumerate.
struct SizeError : std::runtime_error {
    explicit SizeError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace influmax
