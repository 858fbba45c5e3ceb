#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "energy/graph.hpp"

namespace energy {

/// One synchronous round of value iteration:
///   next(u) = max(opt_{(u,v)} (prev(v) - w(u,v)), 0)
/// with opt = min at Alice vertices and max at Bob vertices.
std::vector<Weight> value_iteration_step(const GameGraph& g, std::span<const Weight> previous);

/// Minimum energy for the i-round game, starting from e_0 = 0. O(m * rounds).
EnergyFunction value_iteration(const GameGraph& g, std::size_t rounds);

struct NoNegCycleOptions {
    /// Run a negative-cycle check first and reject offending inputs.
    bool verify = false;
};

/// Exact minimum sufficient energies for graphs without negative cycles:
/// the n-round value. Throws PreconditionError (naming a cycle) when
/// verification is enabled and a negative cycle exists.
EnergyFunction solve_no_neg_cycles(const GameGraph& g, NoNegCycleOptions options = {});

struct FixpointStats {
    std::size_t sweeps = 0;
};

/// General solver: iterate the value-iteration update to a fixpoint, turning
/// any value above (n-1)*W into INFINITY.
EnergyFunction solve_fixpoint(const GameGraph& g, FixpointStats* stats = nullptr);

/// A positional strategy for one player: the chosen out-edge (edge id) of
/// each vertex the player owns, nullopt elsewhere. Choosing edges rather
/// than neighbours keeps parallel edges distinguishable.
struct PositionalStrategy {
    std::vector<std::optional<EdgeId>> choice;
};

/// Minimum initial energy at s for the play fixed by both strategies:
/// max(0, -min prefix weight), or INFINITY if the lasso's cycle is negative.
/// Throws PreconditionError if a strategy misses one of its vertices or
/// picks an edge that does not leave that vertex.
Energy evaluate_strategies(const GameGraph& g, const PositionalStrategy& alice,
                           const PositionalStrategy& bob, Vertex s);

/// Every positional strategy of `who` (cartesian product of out-edges).
/// Mostly useful for exhaustive checks on small graphs.
std::vector<PositionalStrategy> enumerate_strategies(const GameGraph& g, Owner who);

inline constexpr std::uint64_t kDefaultBruteForceBudget = 1'000'000;

/// min over Alice strategies of max over Bob strategies, per start vertex.
/// Throws PreconditionError when the number of strategy pairs exceeds budget.
EnergyFunction brute_force(const GameGraph& g,
                           std::uint64_t budget = kDefaultBruteForceBudget);

/// Witness strategy for Alice from a fixpoint energy function: at a finite
/// Alice vertex u, the lowest-id neighbour v with e(u) + w(u,v) >= e(v);
/// elsewhere the lowest-id neighbour. Throws PreconditionError if some finite
/// Alice vertex has no qualifying edge.
PositionalStrategy extract_alice_strategy(const GameGraph& g, const EnergyFunction& e);

}  // namespace energy
