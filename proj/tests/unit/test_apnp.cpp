#include <doctest.h>

#include "energy/apnp.hpp"
#include "energy/io.hpp"
#include "support/oracles.hpp"

using namespace energy;
using namespace energy::testing;

namespace {

Digraph graph_of(std::size_t n, std::initializer_list<Edge> edges)
{
    return Digraph(n, std::vector<Edge>(edges));
}

const Digraph kTwoCycle = graph_of(2, {{0, 1, -1}, {1, 0, 1}});

}  // namespace

TEST_CASE("split_zero_edges")
{
    // single zero edge u -> v becomes u -> u' -> v
    const auto one = split_zero_edges(graph_of(2, {{0, 1, 0}}));
    CHECK(one.graph.vertex_count() == 3);
    CHECK(one.split_of[0] == Vertex{2});
    CHECK_FALSE(one.split_of[1].has_value());
    CHECK(std::vector<Edge>(one.graph.edges().begin(), one.graph.edges().end()) ==
          std::vector<Edge>{{0, 2, 1}, {2, 1, -1}});

    // no zero edges: unchanged
    const auto plain = graph_of(3, {{0, 1, 1}, {1, 2, -1}});
    const auto same = split_zero_edges(plain);
    CHECK(same.graph == plain);

    // one shared split vertex per source
    const auto shared = split_zero_edges(graph_of(3, {{0, 1, 0}, {0, 2, 0}}));
    CHECK(shared.graph.vertex_count() == 4);
    CHECK(std::vector<Edge>(shared.graph.edges().begin(), shared.graph.edges().end()) ==
          std::vector<Edge>{{0, 3, 1}, {3, 1, -1}, {3, 2, -1}});

    CHECK_THROWS_AS(split_zero_edges(graph_of(2, {{0, 1, 2}})), PreconditionError);
}

TEST_CASE("dyck_reachability examples")
{
    const auto arch = dyck_reachability(graph_of(3, {{0, 1, 1}, {1, 2, -1}}));
    CHECK(arch.reach.get(0, 2));
    CHECK(arch.nonempty.get(0, 2));
    CHECK_FALSE(arch.reach.get(0, 1));

    const auto empty = dyck_reachability(graph_of(3, {}));
    CHECK(empty.reach.count() == 3);
    for (Vertex v = 0; v < 3; ++v) CHECK(empty.reach.get(v, v));
    CHECK(empty.nonempty.count() == 0);

    // a -> b (+1), b -> a (-1): a has the closed walk +1,-1; b's starts at -1
    const auto loop = graph_of(2, {{0, 1, 1}, {1, 0, -1}});
    const auto oracle = dyck_by_search(loop);
    CHECK(oracle.nonempty[0][0]);
    CHECK_FALSE(oracle.nonempty[1][1]);
    const auto d = dyck_reachability(loop);
    CHECK(d.nonempty.get(0, 0));
    CHECK_FALSE(d.nonempty.get(1, 1));

    CHECK_THROWS_AS(dyck_reachability(graph_of(2, {{0, 1, 0}})), PreconditionError);
}

TEST_CASE("dyck_reachability matches state-space search and relation algebra")
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::size_t n = 1 + seed % 9;
        auto g = random_digraph(n, seed % 20, 1, seed + 11);
        std::vector<Edge> pm;
        for (const auto& e : g.edges()) pm.push_back({e.from, e.to, e.weight == 0 ? 1 : e.weight});
        g = Digraph(n, std::move(pm));

        const auto d = dyck_reachability(g);
        const auto oracle = dyck_by_search(g);
        CHECK(matches(d.reach, oracle.possibly_empty));
        CHECK(matches(d.nonempty, oracle.nonempty));
        for (Vertex u = 0; u < n; ++u) {
            CHECK(d.reach.get(u, u));
            for (Vertex v = 0; v < n; ++v) {
                if (d.nonempty.get(u, v)) CHECK(d.reach.get(u, v));
                if (u != v) CHECK(d.reach.get(u, v) == d.nonempty.get(u, v));
                for (Vertex x = 0; x < n; ++x) {
                    if (d.reach.get(u, v) && d.reach.get(v, x)) CHECK(d.reach.get(u, x));
                }
            }
        }
    }
}

TEST_CASE("splitting zero edges preserves Dyck pairs among original vertices")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = 1 + seed % 7;
        const auto g = random_digraph(n, seed % 14, 1, seed + 5);
        const auto split = split_zero_edges(g);
        const auto before = dyck_by_search(g);  // zero edges allowed by the oracle
        const auto after = dyck_reachability(split.graph);
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = 0; v < n; ++v) CHECK(after.nonempty.get(u, v) == before.nonempty[u][v]);
        }
    }
}

TEST_CASE("build_g2")
{
    auto g2_of = [](const Digraph& g) {
        const auto split = split_zero_edges(g);
        return build_g2(g, split, dyck_reachability(split.graph));
    };
    const auto plus = g2_of(graph_of(2, {{0, 1, 1}}));
    CHECK(plus.edge_count() == 1);
    CHECK(plus.edge(0).from == 0);
    CHECK(plus.edge(0).to == 1);

    CHECK(g2_of(graph_of(2, {{0, 1, -1}})).edge_count() == 0);

    const auto arch = g2_of(graph_of(3, {{0, 1, 1}, {1, 2, -1}}));
    bool has_ac = false;
    for (const auto& e : arch.edges()) has_ac = has_ac || (e.from == 0 && e.to == 2);
    CHECK(has_ac);
}

TEST_CASE("transitive_closure")
{
    const auto chain = transitive_closure(graph_of(3, {{0, 1, 0}, {1, 2, 0}}));
    CHECK(chain.get(0, 1));
    CHECK(chain.get(1, 2));
    CHECK(chain.get(0, 2));
    CHECK_FALSE(chain.get(2, 0));
    for (Vertex v = 0; v < 3; ++v) CHECK_FALSE(chain.get(v, v));

    CHECK(transitive_closure(graph_of(1, {{0, 0, 0}})).get(0, 0));
    CHECK(transitive_closure(kTwoCycle).count() == 4);

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t n = 1 + seed % 70;
        const auto g = random_digraph(n, seed % 90, 1, seed);
        const auto tc = transitive_closure(g);
        const auto reach = pairwise_reach(g);
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = 0; v < n; ++v) {
                bool expected = false;
                for (EdgeId id : g.out_edge_ids(u)) expected = expected || reach[g.edge(id).to][v];
                CHECK(tc.get(u, v) == expected);
            }
        }
    }
}

TEST_CASE("apnp_small examples")
{
    // a -> b (+1) -> c (-1) -> d (-1)
    const auto g = graph_of(4, {{0, 1, 1}, {1, 2, -1}, {2, 3, -1}});
    const auto oracle = nnp_by_walks(g, 16);
    CHECK(oracle[0][2]);
    CHECK_FALSE(oracle[0][3]);
    const auto r = apnp_small(g);
    CHECK(r.get(0, 2));
    CHECK_FALSE(r.get(0, 3));

    const auto up = apnp_small(graph_of(3, {{0, 1, 1}, {1, 2, 1}}));
    CHECK(up.get(0, 1));
    CHECK(up.get(0, 2));
    CHECK(up.get(1, 2));
    CHECK(up.count() == 3);

    CHECK(apnp_small(graph_of(1, {})).count() == 0);
}

TEST_CASE("expand_weights")
{
    // W = 2, edge (u, v, -2): u^0 -> u^-1 -> u^-2 -> v^0
    const auto ex = expand_weights(graph_of(2, {{0, 1, -2}}), 2);
    CHECK(ex.graph.vertex_count() == 10);
    const Vertex u0 = ex.map.origin[0];
    const Vertex v0 = ex.map.origin[1];
    CHECK(ex.map.level[u0].original == 0);
    CHECK(ex.map.level[u0].level == 0);
    Vertex at = u0;
    std::vector<Weight> walked;
    for (int step = 0; step < 3; ++step) {
        // follow the unique non-ascending edge
        std::optional<EdgeId> next;
        for (EdgeId id : ex.graph.out_edge_ids(at)) {
            if (ex.graph.edge(id).weight <= 0) next = id;
        }
        REQUIRE(next);
        walked.push_back(ex.graph.edge(*next).weight);
        at = ex.graph.edge(*next).to;
    }
    CHECK(walked == std::vector<Weight>{-1, -1, 0});
    CHECK(at == v0);

    const auto zero = expand_weights(graph_of(2, {{0, 1, 0}}), 1);
    std::size_t zero_edges = 0;
    for (const auto& e : zero.graph.edges()) {
        if (e.weight == 0) {
            ++zero_edges;
            CHECK(e.from == zero.map.origin[0]);
            CHECK(e.to == zero.map.origin[1]);
        }
    }
    CHECK(zero_edges == 1);

    // gadgets alone are acyclic: without the zero edges nothing returns to a vertex
    const auto gadget_only = expand_weights(graph_of(3, {}), 3);
    const auto closure = transitive_closure(gadget_only.graph);
    CHECK(closure.count() > 0);
    for (Vertex x = 0; x < gadget_only.graph.vertex_count(); ++x) CHECK_FALSE(closure.get(x, x));

    CHECK_THROWS_AS(expand_weights(graph_of(2, {{0, 1, 3}}), 2), ValidationError);
}

TEST_CASE("apnp examples")
{
    const auto oracle = apnp_oracle(kTwoCycle, 1);
    const auto r = apnp(kTwoCycle, 1);
    // vertex 2 (index 1): +1 then -1; vertex 1 starts with -1
    CHECK(oracle.get(1, 0));
    CHECK(oracle.get(1, 1));
    CHECK_FALSE(oracle.get(0, 0));
    CHECK_FALSE(oracle.get(0, 1));
    CHECK(r == oracle);

    CHECK(apnp(graph_of(2, {{0, 1, 4}}), 4).get(0, 1));
    CHECK_FALSE(apnp(graph_of(2, {{0, 1, -1}}), 4).get(0, 1));
}

TEST_CASE("apnp_oracle examples")
{
    CHECK(apnp_oracle(graph_of(1, {{0, 0, 1}}), 1).get(0, 0));
    CHECK_FALSE(apnp_oracle(graph_of(1, {{0, 0, -1}}), 1).get(0, 0));
    CHECK_THROWS_AS(apnp_oracle(graph_of(1, {{0, 0, -2}}), 1), ValidationError);
}

TEST_CASE("apnp matches the oracle on random graphs")
{
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const std::size_t n = 1 + seed % 8;
        const Weight W = 1 + static_cast<Weight>(seed % 3);
        const auto g = random_digraph(n, seed % 16, W, seed * 31 + 3);
        const auto oracle = apnp_oracle(g, W);
        CHECK(apnp(g, W) == oracle);
        // a non-saturating search with a generous bound agrees as well
        CHECK(matches(oracle, nnp_by_walks(g, static_cast<Weight>(2 * n) * W + 1)));
    }
}

TEST_CASE("apnp is monotone under edge insertion")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t n = 2 + seed % 6;
        const auto g = random_digraph(n, 1 + seed % 10, 2, seed + 1000);
        const auto extra = random_digraph(n, 1, 2, seed + 2000).edge(0);
        std::vector<Edge> more(g.edges().begin(), g.edges().end());
        more.push_back(extra);
        const auto before = apnp(g, 2);
        const auto after = apnp(Digraph(n, std::move(more)), 2);
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = 0; v < n; ++v) {
                if (before.get(u, v)) CHECK(after.get(u, v));
            }
        }
    }
}

TEST_CASE("a nonnegative cycle has a rotation with nonnegative prefixes")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = 1 + seed % 7;
        const auto g = random_digraph(n, n + seed % 7, 3, seed + 77);
        for (const auto& cycle : simple_cycles(g)) {
            if (path_weight(g, cycle) < 0) continue;
            bool found = false;
            for (std::size_t start = 0; start < cycle.size() && !found; ++start) {
                Weight prefix = 0;
                bool ok = true;
                for (std::size_t k = 0; k < cycle.size(); ++k) {
                    prefix += g.edge(cycle[(start + k) % cycle.size()]).weight;
                    ok = ok && prefix >= 0;
                }
                found = ok;
            }
            CHECK(found);
        }
    }
}

TEST_CASE("apnp via CLI format")
{
    const auto g = parse_instance("p eg 2 1 1\ne 1 2 1\n", InstanceKind::Reachability);
    CHECK(format_reach(apnp(g.graph(), g.max_weight())) == "r 2\n01\n00\n");
}
