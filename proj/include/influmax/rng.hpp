#pragma once

#include <cstdint>

#include "influmax/common.hpp"

namespace influmax {

namespace detail {

// splitmix64 finalizer; full-avalanche 64-bit mixer.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline double to_unit_double(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// Counter-based random stream for one simulation run. Every draw is a pure
/// function of (key, domain, counter), so two processes that consume draws in
/// different orders still see identical per-edge / per-node randomness. This
/// is what makes the IC and IC-N processes couplable run by run, and makes
/// parallel fan-out order-independent.
class RunStream {
  public:
    static RunStream for_run(std::uint64_t base_seed, std::uint64_t run_index) {
        return RunStream(detail::mix64(detail::mix64(base_seed) ^ (run_index + 0x632be59bd9b4e019ULL)));
    }

    explicit RunStream(std::uint64_t key) : key_(key) {}

    /// Uniform [0,1) for the single activation trial on a directed edge.
    double edge_trial(EdgeId e) const {
        return detail::to_unit_double(draw(kEdgeDomain, e, 0));
    }

    /// Uniform [0,1) deciding positive vs negative when a node is activated
    /// by a positive trial (at most one activation per node).
    double quality_draw(NodeId v) const {
        return detail::to_unit_double(draw(kQualityDomain, v, 0));
    }

    /// Raw word feeding the Fisher-Yates shuffle of node v's just-activated
    /// in-neighbors at step `t` (i = draw index within the shuffle).
    std::uint64_t shuffle_word(NodeId v, std::uint32_t t, std::uint32_t i) const {
        return draw(kShuffleDomain, (static_cast<std::uint64_t>(v) << 24) ^ t, i);
    }

    std::uint64_t key() const { return key_; }

  private:
    static constexpr std::uint64_t kEdgeDomain = 0x45u;
    static constexpr std::uint64_t kQualityDomain = 0x51u;
    static constexpr std::uint64_t kShuffleDomain = 0x50u;

    std::uint64_t draw(std::uint64_t domain, std::uint64_t a, std::uint64_t b) const {
        std::uint64_t h = detail::mix64(key_ ^ detail::mix64(domain ^ 0xd1b54a32d192ed03ULL));
        h = detail::mix64(h ^ detail::mix64(a));
        return detail::mix64(h ^ b);
    }

    std::uint64_t key_;
};

/// Unbiased bounded draw from a raw 64-bit word source. Kept here (rather
/// than std::uniform_int_distribution) so generated graphs are bit-identical
/// across standard libraries.
template <typename Rng>
std::uint64_t bounded_draw(Rng& rng, std::uint64_t bound) {
    // rejection sampling on the top of the range
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
        std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

}  // namespace influmax
