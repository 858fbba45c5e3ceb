#pragma once

#include <vector>

#include "energy/graph.hpp"
#include "energy/reach_matrix.hpp"

namespace energy {

/// Vertices whose minimum sufficient energy is 0 in an all-Alice game: those
/// with a nonnegative prefix walk to some u that has a non-empty
/// nonnegative prefix closed walk. `reach` must be the APNP relation of g.
std::vector<Vertex> zero_energy_set(const GameGraph& g, const ReachMatrix& reach);

struct ContractedGraph {
    Digraph graph;
    Vertex sink = 0;
    /// original_of[x] for every non-sink vertex x of graph.
    std::vector<Vertex> original_of;
    /// index_of[v] in graph, or the sink for members of Z.
    std::vector<Vertex> index_of;
};

/// Drop the out-edges of Z and merge Z into a single sink t (last vertex).
/// Other vertices are renumbered in ascending order. Z must be nonempty.
ContractedGraph contract_to_sink(const GameGraph& g, const std::vector<Vertex>& zero_set);

/// Minimum sufficient energies of an all-Alice game graph.
EnergyFunction solve_all_alice(const GameGraph& g);

}  // namespace energy
