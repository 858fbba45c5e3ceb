#include "energy/alice.hpp"

#include <string>
#include <variant>

#include "energy/algorithms.hpp"
#include "energy/apnp.hpp"

namespace energy {

std::vector<Vertex> zero_energy_set(const GameGraph& g, const ReachMatrix& reach)
{
    if (!g.all_owned_by(Owner::Alice)) throw PreconditionError("zero_energy_set needs an all-Alice game graph");
    const std::size_t n = g.vertex_count();
    if (reach.size() != n) throw PreconditionError("reach matrix size does not match the graph");

    std::vector<Vertex> zero;
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u = 0; u < n; ++u) {
            if ((u == v || reach.get(v, u)) && reach.get(u, u)) {
                zero.push_back(v);
                break;
            }
        }
    }
    return zero;
}

ContractedGraph contract_to_sink(const GameGraph& g, const std::vector<Vertex>& zero_set)
{
    if (zero_set.empty()) throw PreconditionError("contract_to_sink needs a nonempty zero-energy set");
    const std::size_t n = g.vertex_count();
    std::vector<bool> in_zero(n, false);
    for (Vertex z : zero_set) in_zero.at(z) = true;

    ContractedGraph result;
    result.index_of.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        if (!in_zero[v]) {
            result.index_of[v] = result.original_of.size();
            result.original_of.push_back(v);
        }
    }
    result.sink = result.original_of.size();
    for (Vertex z : zero_set) result.index_of[z] = result.sink;

    std::vector<Edge> edges;
    for (const auto& e : g.graph().edges()) {
        if (in_zero[e.from]) continue;
        edges.push_back({result.index_of[e.from], result.index_of[e.to], e.weight});
    }
    result.graph = Digraph(result.sink + 1, std::move(edges));
    return result;
}

EnergyFunction solve_all_alice(const GameGraph& g)
{
    if (!g.all_owned_by(Owner::Alice)) throw PreconditionError("all-alice solver given a graph with Bob vertices");
    require_valid_game(g);
    const std::size_t n = g.vertex_count();

    const auto reach = apnp(g.graph(), g.max_weight());
    const auto zero = zero_energy_set(g, reach);
    EnergyFunction energy(n, Energy::infinity());
    if (zero.empty()) return energy;

    // e*(v) = -delta(v, t), delta the max-weight distance to the sink;
    // computed as min distances from t with edges reversed and negated.
    const auto contracted = contract_to_sink(g, zero);
    const auto reversed = contracted.graph.reversed(/*negate_weights=*/true);
    const auto result = bellman_ford(reversed, contracted.sink);
    if (const auto* cycle = std::get_if<NegativeCycle>(&result)) {
        throw InternalError("contracted all-Alice graph has a positive cycle through " +
                            std::to_string(contracted.original_of.at(cycle->cycle.front()) + 1));
    }
    const auto& dist = std::get<SsspResult>(result).dist;

    for (Vertex z : zero) energy[z] = Energy(0);
    for (Vertex x = 0; x < contracted.sink; ++x) {
        const Vertex v = contracted.original_of[x];
        if (!dist[x]) continue;  // cannot reach Z: Alice loses
        const Weight delta = -*dist[x];
        if (delta >= 0) {
            throw InternalError("max distance to the zero set is " + std::to_string(delta) + " >= 0 at vertex " +
                                std::to_string(v + 1));
        }
        energy[v] = Energy(-delta);
    }
    return energy;
}

}  // namespace energy
