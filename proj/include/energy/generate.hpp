#pragma once

#include <cstdint>

#include "energy/graph.hpp"

namespace energy {

struct GeneratorParams {
    std::size_t n = 0;
    std::size_t m = 0;
    Weight max_weight = 1;
    /// Probability that a vertex belongs to Alice.
    double owner_bias = 0.5;
    std::uint64_t seed = 0;
};

/// Each vertex first receives one out-edge, then m - n edges are drawn
/// uniformly. Weights are uniform in [-W, W]. Deterministic in the seed.
/// Throws ValidationError when m < n or W < 1.
GameGraph gen_random(const GeneratorParams& params);

/// Same edge structure as gen_random, but weights are p(u) - p(v) + c with
/// potentials p in [0, W] and slack c >= 0 (clamped to W), so every cycle
/// has nonnegative weight.
GameGraph gen_no_neg_cycle(const GeneratorParams& params);

/// Complete digraph on n vertices without self-loops, weights uniform in
/// [-W, W], all vertices Alice. Input for the negative-triangle reduction.
GameGraph gen_complete(std::size_t n, Weight max_weight, std::uint64_t seed);

}  // namespace energy
