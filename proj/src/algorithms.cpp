#include "energy/algorithms.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <utility>

namespace energy {

SccResult strongly_connected_components(const Digraph& g)
{
    // iterative Tarjan
    const std::size_t n = g.vertex_count();
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> index(n, unvisited);
    std::vector<std::size_t> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<Vertex> stack;
    std::vector<std::pair<Vertex, std::size_t>> call;  // (vertex, next out-edge position)
    std::size_t counter = 0;

    SccResult result;
    result.component_of.assign(n, 0);

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call.empty()) {
            auto& [v, pos] = call.back();
            const auto out = g.out_edge_ids(v);
            if (pos < out.size()) {
                const Vertex w = g.edge(out[pos++]).to;
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<Vertex> component;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    result.component_of[w] = result.components.size();
                    component.push_back(w);
                } while (w != v);
                std::sort(component.begin(), component.end());
                result.components.push_back(std::move(component));
            }
            const Vertex finished = v;
            call.pop_back();
            if (!call.empty()) {
                const Vertex parent = call.back().first;
                low[parent] = std::min(low[parent], low[finished]);
            }
        }
    }

    std::set<std::pair<std::size_t, std::size_t>> dag_edges;
    for (const auto& e : g.edges()) {
        const auto a = result.component_of[e.from];
        const auto b = result.component_of[e.to];
        if (a != b) dag_edges.emplace(a, b);
    }
    std::vector<Edge> edges;
    edges.reserve(dag_edges.size());
    for (auto [a, b] : dag_edges) edges.push_back({a, b, 0});
    result.dag = Digraph(result.components.size(), std::move(edges));
    return result;
}

Weight cycle_weight(const Digraph& g, const std::vector<Vertex>& cycle)
{
    Weight total = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Vertex u = cycle[i];
        const Vertex v = cycle[(i + 1) % cycle.size()];
        std::optional<Weight> best;
        for (EdgeId id : g.out_edge_ids(u)) {
            const auto& e = g.edge(id);
            if (e.to == v && (!best || e.weight < *best)) best = e.weight;
        }
        if (!best) throw InternalError("cycle step without an edge");
        total += *best;
    }
    return total;
}

namespace {

// Walk parent pointers from `start`; if they close a loop, return it in
// forward (edge) order.
std::optional<std::vector<Vertex>> parent_cycle_from(const std::vector<std::optional<Vertex>>& parent,
                                                     Vertex start, std::size_t n)
{
    Vertex v = start;
    for (std::size_t i = 0; i < n; ++i) {
        if (!parent[v]) return std::nullopt;
        v = *parent[v];
    }
    // v now lies on a cycle if parents were followed n times
    std::vector<Vertex> cycle{v};
    for (Vertex u = *parent[v]; u != v; u = *parent[u]) cycle.push_back(u);
    std::reverse(cycle.begin(), cycle.end());
    return cycle;
}

// Cycle anywhere in the parent forest, found by colouring walks.
std::optional<std::vector<Vertex>> find_parent_cycle(const std::vector<std::optional<Vertex>>& parent)
{
    const std::size_t n = parent.size();
    std::vector<std::size_t> stamp(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if (stamp[s]) continue;
        Vertex v = s;
        while (true) {
            if (stamp[v] == s + 1) {
                std::vector<Vertex> cycle{v};
                for (Vertex u = *parent[v]; u != v; u = *parent[u]) cycle.push_back(u);
                std::reverse(cycle.begin(), cycle.end());
                return cycle;
            }
            if (stamp[v]) break;
            stamp[v] = s + 1;
            if (!parent[v]) break;
            v = *parent[v];
        }
    }
    return std::nullopt;
}

// Round-based relaxation from the given initial distances. A cycle in the
// parent graph is a negative cycle, so it is checked after every round to
// stop early.
BellmanFordResult relax(const Digraph& g, std::vector<std::optional<Weight>> dist, std::size_t round_cap)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::optional<Vertex>> parent(n);
    const auto edges = g.edges();

    auto checked = [&](std::vector<Vertex> cycle) -> BellmanFordResult {
        if (cycle_weight(g, cycle) >= 0) throw InternalError("parent cycle is not negative");
        return NegativeCycle{std::move(cycle)};
    };

    for (std::size_t round = 1;; ++round) {
        bool changed = false;
        const bool final_round = round >= round_cap;
        for (const auto& e : edges) {
            if (!dist[e.from]) continue;
            const Weight candidate = *dist[e.from] + e.weight;
            if (!dist[e.to] || candidate < *dist[e.to]) {
                dist[e.to] = candidate;
                parent[e.to] = e.from;
                changed = true;
                if (final_round) {
                    if (auto cycle = parent_cycle_from(parent, e.to, n)) return checked(std::move(*cycle));
                }
            }
        }
        if (!changed) break;
        if (auto cycle = find_parent_cycle(parent)) return checked(std::move(*cycle));
        if (final_round && round > round_cap + n) throw InternalError("Bellman-Ford failed to isolate a cycle");
    }
    return SsspResult{std::move(dist), std::move(parent)};
}

}  // namespace

BellmanFordResult bellman_ford(const Digraph& g, Vertex source)
{
    if (source >= g.vertex_count()) throw std::out_of_range("source vertex out of range");
    std::vector<std::optional<Weight>> dist(g.vertex_count());
    dist[source] = 0;
    return relax(g, std::move(dist), g.vertex_count());
}

std::optional<NegativeCycle> find_negative_cycle(const Digraph& g)
{
    std::vector<std::optional<Weight>> dist(g.vertex_count(), Weight{0});
    auto result = relax(g, std::move(dist), g.vertex_count() + 1);
    if (auto* cycle = std::get_if<NegativeCycle>(&result)) return std::move(*cycle);
    return std::nullopt;
}

std::vector<Vertex> reachable_to(const Digraph& g, const std::vector<Vertex>& targets)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<Vertex>> in(n);
    for (const auto& e : g.edges()) in[e.to].push_back(e.from);

    std::vector<bool> seen(n, false);
    std::deque<Vertex> queue;
    for (Vertex t : targets) {
        if (t >= n) throw std::out_of_range("target vertex out of range");
        if (!seen[t]) {
            seen[t] = true;
            queue.push_back(t);
        }
    }
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex u : in[v]) {
            if (!seen[u]) {
                seen[u] = true;
                queue.push_back(u);
            }
        }
    }
    std::vector<Vertex> result;
    for (Vertex v = 0; v < n; ++v) {
        if (seen[v]) result.push_back(v);
    }
    return result;
}

}  // namespace energy
