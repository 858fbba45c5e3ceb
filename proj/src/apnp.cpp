#include "energy/apnp.hpp"

#include <bit>
#include <deque>
#include <string>
#include <utility>

namespace energy {
namespace {

template <typename Fn>
void for_each_bit(std::span<const std::uint64_t> words, Fn&& fn)
{
    for (std::size_t w = 0; w < words.size(); ++w) {
        std::uint64_t bits = words[w];
        while (bits) {
            const int b = std::countr_zero(bits);
            bits &= bits - 1;
            fn(w * 64 + static_cast<std::size_t>(b));
        }
    }
}

}  // namespace

SplitGraph split_zero_edges(const Digraph& g)
{
    const std::size_t n = g.vertex_count();
    SplitGraph result;
    result.original_count = n;
    result.split_of.assign(n, std::nullopt);

    std::size_t next = n;
    for (const auto& e : g.edges()) {
        if (e.weight < -1 || e.weight > 1) {
            throw PreconditionError("split_zero_edges needs weights in {-1, 0, +1}, got " + std::to_string(e.weight));
        }
    }
    // split vertices are numbered by ascending owner vertex
    for (Vertex u = 0; u < n; ++u) {
        for (EdgeId id : g.out_edge_ids(u)) {
            if (g.edge(id).weight == 0) {
                result.split_of[u] = next++;
                break;
            }
        }
    }

    std::vector<Edge> edges;
    edges.reserve(g.edge_count() + (next - n));
    for (Vertex u = 0; u < n; ++u) {
        if (result.split_of[u]) edges.push_back({u, *result.split_of[u], +1});
    }
    for (const auto& e : g.edges()) {
        if (e.weight == 0) {
            edges.push_back({*result.split_of[e.from], e.to, -1});
        } else {
            edges.push_back(e);
        }
    }
    result.graph = Digraph(next, std::move(edges));
    return result;
}

DyckRelations dyck_reachability(const Digraph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<Vertex>> plus_in(n);
    std::vector<std::vector<Vertex>> minus_out(n);
    for (const auto& e : g.edges()) {
        if (e.weight == 1) {
            plus_in[e.to].push_back(e.from);
        } else if (e.weight == -1) {
            minus_out[e.from].push_back(e.to);
        } else {
            throw PreconditionError("dyck_reachability needs weights in {-1, +1}, got " + std::to_string(e.weight));
        }
    }

    // nonempty and its transpose, so both N(y, .) and N(., x) are row scans
    ReachMatrix nonempty(n);
    ReachMatrix transposed(n);
    std::vector<std::pair<Vertex, Vertex>> worklist;
    auto add = [&](Vertex u, Vertex v) {
        if (nonempty.get(u, v)) return;
        nonempty.set(u, v);
        transposed.set(v, u);
        worklist.emplace_back(u, v);
    };
    auto add_arches = [&](Vertex x, Vertex y) {
        for (Vertex u : plus_in[x]) {
            for (Vertex v : minus_out[y]) add(u, v);
        }
    };

    // arches around an empty inner path
    for (Vertex x = 0; x < n; ++x) add_arches(x, x);

    std::vector<std::uint64_t> scratch;
    while (!worklist.empty()) {
        const auto [x, y] = worklist.back();
        worklist.pop_back();
        add_arches(x, y);
        // (x,y)(y,z) -> (x,z)
        const auto right = nonempty.row(y);
        scratch.assign(right.begin(), right.end());
        for_each_bit(scratch, [&](Vertex z) { add(x, z); });
        // (z,x)(x,y) -> (z,y)
        const auto left = transposed.row(x);
        scratch.assign(left.begin(), left.end());
        for_each_bit(scratch, [&](Vertex z) { add(z, y); });
    }

    DyckRelations result{nonempty, std::move(nonempty)};
    for (Vertex v = 0; v < n; ++v) result.reach.set(v, v);
    return result;
}

Digraph build_g2(const Digraph& g_original, const SplitGraph& split, const DyckRelations& dyck)
{
    const std::size_t n = g_original.vertex_count();
    if (split.original_count != n || dyck.nonempty.size() != split.graph.vertex_count()) {
        throw PreconditionError("build_g2: vertex sets of the original, split, and Dyck inputs disagree");
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (dyck.nonempty.get(u, v)) edges.push_back({u, v, 0});
        }
    }
    for (const auto& e : g_original.edges()) {
        if (e.weight >= 0 && !dyck.nonempty.get(e.from, e.to)) edges.push_back({e.from, e.to, 0});
    }
    return Digraph(n, std::move(edges));
}

ReachMatrix transitive_closure(const Digraph& g)
{
    const std::size_t n = g.vertex_count();
    ReachMatrix adjacency(n);
    for (const auto& e : g.edges()) adjacency.set(e.from, e.to);

    ReachMatrix closure(n);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        auto visited = closure.row(s);
        const auto first = adjacency.row(s);
        std::copy(first.begin(), first.end(), visited.begin());
        for_each_bit(first, [&](Vertex v) { stack.push_back(v); });
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            const auto next = adjacency.row(v);
            for (std::size_t w = 0; w < next.size(); ++w) {
                std::uint64_t fresh = next[w] & ~visited[w];
                if (!fresh) continue;
                visited[w] |= fresh;
                while (fresh) {
                    stack.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(fresh)));
                    fresh &= fresh - 1;
                }
            }
        }
    }
    return closure;
}

ReachMatrix apnp_small(const Digraph& g)
{
    const auto split = split_zero_edges(g);
    const auto dyck = dyck_reachability(split.graph);
    return transitive_closure(build_g2(g, split, dyck));
}

ExpandedGraph expand_weights(const Digraph& g, Weight max_weight)
{
    if (max_weight < 0) throw ValidationError("weight bound W must be nonnegative");
    const std::size_t n = g.vertex_count();
    const std::size_t width = 2 * static_cast<std::size_t>(max_weight) + 1;
    auto id = [&](Vertex v, Weight level) {
        return v * width + static_cast<std::size_t>(level + max_weight);
    };

    ExpandedGraph result;
    result.map.max_weight = static_cast<std::size_t>(max_weight);
    result.map.origin.resize(n);
    result.map.level.resize(n * width);

    std::vector<Edge> edges;
    edges.reserve(n * (width - 1) + g.edge_count());
    for (Vertex v = 0; v < n; ++v) {
        result.map.origin[v] = id(v, 0);
        for (Weight i = -max_weight; i <= max_weight; ++i) result.map.level[id(v, i)] = {v, i};
        for (Weight i = 1; i <= max_weight; ++i) edges.push_back({id(v, i - 1), id(v, i), +1});
        for (Weight i = -1; i >= -max_weight; --i) edges.push_back({id(v, i + 1), id(v, i), -1});
    }
    for (const auto& e : g.edges()) {
        if (e.weight > max_weight || e.weight < -max_weight) {
            throw ValidationError("edge weight " + std::to_string(e.weight) + " exceeds W = " +
                                  std::to_string(max_weight));
        }
        edges.push_back({id(e.from, e.weight), id(e.to, 0), 0});
    }
    result.graph = Digraph(n * width, std::move(edges));
    return result;
}

ReachMatrix apnp(const Digraph& g, Weight max_weight)
{
    const auto expanded = expand_weights(g, max_weight);
    const auto inner = apnp_small(expanded.graph);
    const auto& origin = expanded.map.origin;
    ReachMatrix result(g.vertex_count());
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (inner.get(origin[u], origin[v])) result.set(u, v);
        }
    }
    return result;
}

ReachMatrix apnp_oracle(const Digraph& g, Weight max_weight)
{
    const std::size_t n = g.vertex_count();
    for (const auto& e : g.edges()) {
        if (e.weight > max_weight || e.weight < -max_weight) {
            throw ValidationError("edge weight " + std::to_string(e.weight) + " exceeds W = " +
                                  std::to_string(max_weight));
        }
    }
    // Above n*W energy every simple path stays nonnegative, so saturating
    // there loses no reachability.
    const Weight cap = static_cast<Weight>(n) * max_weight;
    const std::size_t levels = static_cast<std::size_t>(cap) + 1;

    ReachMatrix result(n);
    std::vector<bool> seen(n * levels);
    std::deque<std::pair<Vertex, Weight>> queue;
    for (Vertex source = 0; source < n; ++source) {
        std::fill(seen.begin(), seen.end(), false);
        // the start state is not marked: revisiting it needs a real transition
        queue.emplace_back(source, 0);
        while (!queue.empty()) {
            const auto [v, energy] = queue.front();
            queue.pop_front();
            for (EdgeId id : g.out_edge_ids(v)) {
                const auto& e = g.edge(id);
                const Weight next = energy + e.weight;
                if (next < 0) continue;
                const Weight stored = std::min(next, cap);
                result.set(source, e.to);
                const std::size_t state = e.to * levels + static_cast<std::size_t>(stored);
                if (!seen[state]) {
                    seen[state] = true;
                    queue.emplace_back(e.to, stored);
                }
            }
        }
    }
    return result;
}

}  // namespace energy
