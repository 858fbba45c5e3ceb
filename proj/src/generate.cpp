#include "energy/generate.hpp"

#include <algorithm>
#include <random>

#include "energy/algorithms.hpp"

namespace energy {
namespace {

void check_params(const GeneratorParams& p)
{
    if (p.n == 0) throw ValidationError("generator needs n >= 1");
    if (p.m < p.n) throw ValidationError("generator needs m >= n so every vertex gets an out-edge");
    if (p.max_weight < 1) throw ValidationError("generator needs W >= 1");
    if (p.owner_bias < 0.0 || p.owner_bias > 1.0) throw ValidationError("owner bias must lie in [0, 1]");
}

struct Skeleton {
    std::vector<std::pair<Vertex, Vertex>> arcs;
    std::vector<Owner> owners;
};

// One out-edge per vertex, then m - n uniform arcs, then owners.
Skeleton draw_skeleton(const GeneratorParams& p, std::mt19937_64& rng)
{
    std::uniform_int_distribution<Vertex> pick(0, p.n - 1);
    Skeleton s;
    s.arcs.reserve(p.m);
    for (Vertex v = 0; v < p.n; ++v) s.arcs.emplace_back(v, pick(rng));
    for (std::size_t i = p.n; i < p.m; ++i) {
        const Vertex u = pick(rng);
        s.arcs.emplace_back(u, pick(rng));
    }
    std::bernoulli_distribution alice(p.owner_bias);
    s.owners.reserve(p.n);
    for (Vertex v = 0; v < p.n; ++v) s.owners.push_back(alice(rng) ? Owner::Alice : Owner::Bob);
    return s;
}

}  // namespace

GameGraph gen_random(const GeneratorParams& params)
{
    check_params(params);
    std::mt19937_64 rng(params.seed);
    auto skeleton = draw_skeleton(params, rng);
    std::uniform_int_distribution<Weight> weight(-params.max_weight, params.max_weight);
    std::vector<Edge> edges;
    edges.reserve(params.m);
    for (auto [u, v] : skeleton.arcs) edges.push_back({u, v, weight(rng)});
    return GameGraph(Digraph(params.n, std::move(edges)), std::move(skeleton.owners), params.max_weight);
}

GameGraph gen_no_neg_cycle(const GeneratorParams& params)
{
    check_params(params);
    std::mt19937_64 rng(params.seed);
    auto skeleton = draw_skeleton(params, rng);

    const Weight W = params.max_weight;
    std::uniform_int_distribution<Weight> potential_dist(0, W);
    std::vector<Weight> potential(params.n);
    for (auto& p : potential) p = potential_dist(rng);

    // Half the edges are tight (c = 0) so zero-weight cycles show up.
    std::bernoulli_distribution tight(0.5);
    std::uniform_int_distribution<Weight> slack(1, W);
    std::vector<Edge> edges;
    edges.reserve(params.m);
    for (auto [u, v] : skeleton.arcs) {
        const Weight c = tight(rng) ? 0 : slack(rng);
        // p(u) - p(v) >= -W, so only the upper clamp can bind, and it keeps w >= p(u) - p(v)
        const Weight w = std::clamp(potential[u] - potential[v] + c, -W, W);
        edges.push_back({u, v, w});
    }
    GameGraph g(Digraph(params.n, std::move(edges)), std::move(skeleton.owners), W);
    if (find_negative_cycle(g.graph())) throw InternalError("gen_no_neg_cycle produced a negative cycle");
    return g;
}

GameGraph gen_complete(std::size_t n, Weight max_weight, std::uint64_t seed)
{
    if (n == 0) throw ValidationError("generator needs n >= 1");
    if (max_weight < 1) throw ValidationError("generator needs W >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Weight> weight(-max_weight, max_weight);
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1));
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u != v) edges.push_back({u, v, weight(rng)});
        }
    }
    return GameGraph(Digraph(n, std::move(edges)), std::vector<Owner>(n, Owner::Alice), max_weight);
}

}  // namespace energy
