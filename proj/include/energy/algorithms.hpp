#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "energy/graph.hpp"

namespace energy {

struct SccResult {
    /// Components in reverse topological order of the condensation: every
    /// edge between two components goes from a later index to an earlier one.
    std::vector<std::vector<Vertex>> components;
    std::vector<std::size_t> component_of;
    /// Condensation: one vertex per component, deduplicated edges, no loops.
    Digraph dag;
};

SccResult strongly_connected_components(const Digraph& g);

struct SsspResult {
    /// nullopt = unreachable from the source.
    std::vector<std::optional<Weight>> dist;
    std::vector<std::optional<Vertex>> parent;
};

struct NegativeCycle {
    /// Vertices in walk order; the closing edge returns to cycle.front().
    std::vector<Vertex> cycle;
};

using BellmanFordResult = std::variant<SsspResult, NegativeCycle>;

/// Single-source shortest walks. Returns a concrete negative cycle if one is
/// reachable from `source`.
BellmanFordResult bellman_ford(const Digraph& g, Vertex source);

/// Any negative cycle of g (as if from a virtual source tied to every vertex).
std::optional<NegativeCycle> find_negative_cycle(const Digraph& g);

/// Weight of the closed walk cycle[0] -> cycle[1] -> ... -> cycle[0] using the
/// lightest parallel edge at each step. Throws if a step has no edge.
Weight cycle_weight(const Digraph& g, const std::vector<Vertex>& cycle);

/// All vertices with a path (possibly empty) to some target. Sorted.
std::vector<Vertex> reachable_to(const Digraph& g, const std::vector<Vertex>& targets);

}  // namespace energy
