#pragma once

#include <vector>

#include "energy/graph.hpp"

namespace energy {

/// Vertices of an all-Bob game that can reach a negative cycle. Sorted.
std::vector<Vertex> infinite_energy_set(const GameGraph& g);

/// Minimum sufficient energies of an all-Bob game graph.
EnergyFunction solve_all_bob(const GameGraph& g);

}  // namespace energy
