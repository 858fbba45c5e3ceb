#include "energy/reductions.hpp"

#include <algorithm>
#include <optional>

#include "energy/apnp.hpp"

namespace energy {

NegTriangleInstance neg_triangle_to_apnp(const Digraph& g)
{
    const std::size_t n = g.vertex_count();
    auto layer = [n](Vertex v, std::size_t i) { return (i - 1) * n + v; };

    NegTriangleInstance out;
    std::vector<Edge> edges;
    edges.reserve(3 * g.edge_count() + n);
    for (const auto& e : g.edges()) {
        if (e.from == e.to) throw PreconditionError("negative-triangle input has a self-loop at " + std::to_string(e.from + 1));
        for (std::size_t i = 1; i < 4; ++i) edges.push_back({layer(e.from, i), layer(e.to, i + 1), -e.weight});
    }
    for (Vertex v = 0; v < n; ++v) {
        edges.push_back({layer(v, 4), layer(v, 5), -1});
        out.queries.emplace_back(layer(v, 1), layer(v, 5));
    }
    out.max_weight = std::max<Weight>(g.max_abs_weight(), 1);
    out.graph = Digraph(5 * n, std::move(edges));
    return out;
}

bool has_negative_triangle_via_apnp(const Digraph& g)
{
    const auto instance = neg_triangle_to_apnp(g);
    const auto reach = apnp(instance.graph, instance.max_weight);
    return std::any_of(instance.queries.begin(), instance.queries.end(),
                       [&](const auto& q) { return reach.get(q.first, q.second); });
}

bool brute_force_neg_triangle(const Digraph& g)
{
    const std::size_t n = g.vertex_count();
    // lightest edge per ordered pair
    std::vector<std::optional<Weight>> w(n * n);
    for (const auto& e : g.edges()) {
        auto& slot = w[e.from * n + e.to];
        if (!slot || e.weight < *slot) slot = e.weight;
    }
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = 0; b < n; ++b) {
            if (b == a || !w[a * n + b]) continue;
            for (Vertex c = 0; c < n; ++c) {
                if (c == a || c == b || !w[b * n + c] || !w[c * n + a]) continue;
                if (*w[a * n + b] + *w[b * n + c] + *w[c * n + a] < 0) return true;
            }
        }
    }
    return false;
}

}  // namespace energy
