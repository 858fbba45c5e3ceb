#include "energy/bob.hpp"

#include <algorithm>
#include <variant>

#include "energy/algorithms.hpp"

namespace energy {

std::vector<Vertex> infinite_energy_set(const GameGraph& g)
{
    if (!g.all_owned_by(Owner::Bob)) throw PreconditionError("infinite_energy_set needs an all-Bob game graph");
    const auto& graph = g.graph();
    const auto scc = strongly_connected_components(graph);

    // split the edges by component in one pass, with component-local ids
    std::vector<Vertex> local(graph.vertex_count());
    for (const auto& component : scc.components) {
        for (std::size_t i = 0; i < component.size(); ++i) local[component[i]] = i;
    }
    std::vector<std::vector<Edge>> inner(scc.components.size());
    for (const auto& e : graph.edges()) {
        const auto c = scc.component_of[e.from];
        if (c == scc.component_of[e.to]) inner[c].push_back({local[e.from], local[e.to], e.weight});
    }

    std::vector<Vertex> losing;
    for (std::size_t c = 0; c < scc.components.size(); ++c) {
        if (inner[c].empty()) continue;
        const Digraph sub(scc.components[c].size(), std::move(inner[c]));
        if (find_negative_cycle(sub)) {
            losing.insert(losing.end(), scc.components[c].begin(), scc.components[c].end());
        }
    }
    return reachable_to(graph, losing);
}

EnergyFunction solve_all_bob(const GameGraph& g)
{
    if (!g.all_owned_by(Owner::Bob)) throw PreconditionError("all-bob solver given a graph with Alice vertices");
    require_valid_game(g);
    const auto& graph = g.graph();
    const std::size_t n = graph.vertex_count();

    EnergyFunction energy(n, Energy::infinity());
    std::vector<bool> finite(n, true);
    for (Vertex v : infinite_energy_set(g)) finite[v] = false;

    std::vector<Vertex> original_of;
    const auto rest = graph.induced(finite, &original_of);
    if (original_of.empty()) return energy;

    // Sink t with a zero edge from every vertex; d(v, t) from t on the
    // reversed graph.
    const Vertex sink = rest.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(rest.edge_count() + sink);
    for (const auto& e : rest.edges()) edges.push_back({e.to, e.from, e.weight});
    for (Vertex v = 0; v < sink; ++v) edges.push_back({sink, v, 0});
    const Digraph flipped(sink + 1, std::move(edges));

    const auto result = bellman_ford(flipped, sink);
    if (std::holds_alternative<NegativeCycle>(result)) {
        throw InternalError("negative cycle left after removing the infinite-energy set");
    }
    const auto& dist = std::get<SsspResult>(result).dist;
    for (Vertex x = 0; x < sink; ++x) energy[original_of[x]] = Energy(std::max<Weight>(-*dist[x], 0));
    return energy;
}

}  // namespace energy
