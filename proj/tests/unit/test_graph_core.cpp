#include <doctest.h>

#include <variant>

#include "energy/algorithms.hpp"
#include "energy/generate.hpp"
#include "energy/io.hpp"
#include "support/oracles.hpp"

using namespace energy;
using namespace energy::testing;

namespace {

const char* kTwoCycle = "p eg 2 2 1\no 1 A\no 2 A\ne 1 2 -1\ne 2 1 1\n";

Digraph chain(std::initializer_list<Edge> edges, std::size_t n)
{
    return Digraph(n, std::vector<Edge>(edges));
}

}  // namespace

TEST_CASE("parse_instance: smallest legal instance")
{
    const auto g = parse_instance("p eg 1 1 1\no 1 A\ne 1 1 0\n");
    CHECK(g.vertex_count() == 1);
    CHECK(g.max_weight() == 1);
    CHECK(g.owner(0) == Owner::Alice);
    REQUIRE(g.graph().edge_count() == 1);
    CHECK(g.graph().edge(0) == Edge{0, 0, 0});
    CHECK(validate_game(g).empty());
}

TEST_CASE("parse_instance: two-cycle fixture")
{
    const auto g = parse_instance(kTwoCycle);
    CHECK(g.vertex_count() == 2);
    CHECK(g.all_owned_by(Owner::Alice));
    CHECK(g.graph().edge(0) == Edge{0, 1, -1});
    CHECK(g.graph().edge(1) == Edge{1, 0, 1});
}

TEST_CASE("parse_instance: comments anywhere, blank lines, CRLF")
{
    const auto g = parse_instance("c header\r\n\r\np eg 2 1 3\r\nc mid\r\no 2 B\r\no 1 A\r\ne 2 1 -3\r\nc end\r\n");
    CHECK(g.owner(1) == Owner::Bob);
    CHECK(g.graph().edge(0) == Edge{1, 0, -3});
}

TEST_CASE("parse_instance: errors")
{
    CHECK_THROWS_AS(parse_instance("p eg 2 1 5\no 1 B\ne 1 2 9\n", InstanceKind::Reachability), ValidationError);
    CHECK_THROWS_WITH_AS(parse_instance("p eg 2 1 5\no 1 B\ne 1 2 9\n", InstanceKind::Reachability),
                         doctest::Contains("W=5"), ValidationError);
    CHECK_THROWS_AS(parse_instance("p eg 1 0 1\np eg 1 0 1\no 1 A\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("o 1 A\np eg 1 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("p eg 1 1 1\no 1 A\ne 1 2 0\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("p eg 1 2 1\no 1 A\ne 1 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("p eg 1 1 1\no 1 X\ne 1 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("p eg 1 1 1\no 1 A\no 1 B\ne 1 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("p eg 2 0 1\no 1 A\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("p eg 1 1 1\no 1 A\ne 1 1 x\n"), ParseError);
    CHECK_THROWS_AS(parse_instance(""), ParseError);

    try {
        parse_instance("c\np eg 1 1 1\no 1 A\nq 1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("parse_instance: owners optional for reachability instances")
{
    const auto g = parse_instance("p eg 2 1 1\ne 1 2 1\n", InstanceKind::Reachability);
    CHECK(g.all_owned_by(Owner::Alice));
    CHECK_THROWS_AS(parse_instance("p eg 2 1 1\ne 1 2 1\n"), ParseError);
}

TEST_CASE("serialize/parse round trip on the canonical form")
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto g = gen_random({1 + seed % 9, 2 * (1 + seed % 9), 1 + static_cast<Weight>(seed % 4), 0.5, seed});
        const auto text = serialize_instance(g);
        const auto back = parse_instance(text);
        CHECK(back == g);
        CHECK(serialize_instance(back) == text);
    }
}

TEST_CASE("validate_game")
{
    CHECK(validate_game(parse_instance(kTwoCycle)).empty());

    const GameGraph isolated(Digraph(3, {{0, 1, 0}, {1, 0, 0}}), std::vector<Owner>(3, Owner::Alice), 1);
    const auto found = validate_game(isolated);
    REQUIRE(found.size() == 1);
    CHECK(found[0].kind == Violation::Kind::NoOutEdge);
    CHECK(found[0].vertex == 2);
    CHECK_THROWS_AS(require_valid_game(isolated), ValidationError);

    const GameGraph heavy(Digraph(2, {{0, 1, 1}, {1, 0, -2}}), {Owner::Bob, Owner::Bob}, 1);
    const auto bad = validate_game(heavy);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].kind == Violation::Kind::WeightOutOfRange);
    CHECK(bad[0].edge == 1);
}

TEST_CASE("Energy ordering and arithmetic")
{
    CHECK(Energy(3) < Energy::infinity());
    CHECK(Energy::infinity() == Energy::infinity());
    CHECK(Energy(0) < Energy(1));
    CHECK(required_before(Energy::infinity(), 100) == Energy::infinity());
    CHECK(required_before(Energy(2), 5) == Energy(0));
    CHECK(required_before(Energy(2), -3) == Energy(5));
    CHECK_THROWS(Energy(-1));
    CHECK_THROWS(Energy::infinity().value());
    CHECK(format_energy({Energy(1), Energy::infinity()}) == "v 1 1\nv 2 inf\n");
}

TEST_CASE("scc examples")
{
    const auto two = strongly_connected_components(parse_instance(kTwoCycle).graph());
    CHECK(two.components.size() == 1);
    CHECK(two.components[0] == std::vector<Vertex>{0, 1});

    const auto path = strongly_connected_components(chain({{0, 1, 0}, {1, 2, 0}}, 3));
    CHECK(path.components.size() == 3);
    CHECK(path.dag.edge_count() == 2);

    const auto mixed = strongly_connected_components(chain({{0, 1, 0}, {1, 0, 0}, {1, 2, 0}, {2, 2, 0}}, 3));
    REQUIRE(mixed.components.size() == 2);
    CHECK(mixed.component_of[0] == mixed.component_of[1]);
    CHECK(mixed.component_of[2] != mixed.component_of[0]);
    CHECK(mixed.dag.edge_count() == 1);
}

TEST_CASE("scc matches mutual BFS reachability")
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::size_t n = 1 + seed % 8;
        const auto g = random_digraph(n, seed % 17, 1, seed);
        const auto scc = strongly_connected_components(g);
        const auto reach = pairwise_reach(g);
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = 0; v < n; ++v) {
                CHECK((scc.component_of[u] == scc.component_of[v]) == (reach[u][v] && reach[v][u]));
            }
        }
        // reverse topological order: edges never point to a later component
        for (const auto& e : g.edges()) CHECK(scc.component_of[e.from] >= scc.component_of[e.to]);
    }
}

TEST_CASE("bellman_ford examples")
{
    const auto r1 = bellman_ford(chain({{0, 1, -3}, {1, 1, 0}}, 2), 0);
    REQUIRE(std::holds_alternative<SsspResult>(r1));
    CHECK(std::get<SsspResult>(r1).dist[1] == -3);
    CHECK(std::get<SsspResult>(r1).parent[1] == 0);

    const auto r2 = bellman_ford(chain({{0, 0, -1}}, 1), 0);
    REQUIRE(std::holds_alternative<NegativeCycle>(r2));
    CHECK(std::get<NegativeCycle>(r2).cycle == std::vector<Vertex>{0});

    const auto r3 = bellman_ford(parse_instance(kTwoCycle).graph(), 0);
    REQUIRE(std::holds_alternative<SsspResult>(r3));
    CHECK(std::get<SsspResult>(r3).dist[1] == -1);
    CHECK(std::get<SsspResult>(r3).dist[0] == 0);

    const auto r4 = bellman_ford(chain({{1, 0, 5}}, 2), 0);
    CHECK_FALSE(std::get<SsspResult>(r4).dist[1].has_value());

    CHECK_THROWS_AS(bellman_ford(chain({}, 1), 3), std::out_of_range);
}

TEST_CASE("bellman_ford agrees with cycle enumeration")
{
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const std::size_t n = 1 + seed % 7;
        const auto g = random_digraph(n, n + seed % 8, 3, seed * 7 + 1);
        const auto reach = pairwise_reach(g);
        const auto cycles = simple_cycles(g);
        for (Vertex s = 0; s < n; ++s) {
            bool expected = false;
            for (const auto& c : cycles) {
                if (path_weight(g, c) < 0 && reach[s][g.edge(c[0]).from]) expected = true;
            }
            const auto result = bellman_ford(g, s);
            CHECK(std::holds_alternative<NegativeCycle>(result) == expected);
            if (const auto* cycle = std::get_if<NegativeCycle>(&result)) {
                CHECK(cycle_weight(g, cycle->cycle) < 0);
            } else {
                // triangle inequality on every edge out of a reached vertex
                const auto& dist = std::get<SsspResult>(result).dist;
                for (const auto& e : g.edges()) {
                    if (dist[e.from]) {
                        REQUIRE(dist[e.to]);
                        CHECK(*dist[e.to] <= *dist[e.from] + e.weight);
                    }
                }
            }
        }
        bool any_negative = false;
        for (const auto& c : cycles) any_negative = any_negative || path_weight(g, c) < 0;
        CHECK(find_negative_cycle(g).has_value() == any_negative);
    }
}

TEST_CASE("reachable_to examples")
{
    const auto path = chain({{0, 1, 0}, {1, 2, 0}}, 3);
    CHECK(reachable_to(path, {2}) == std::vector<Vertex>{0, 1, 2});
    CHECK(reachable_to(path, {}).empty());
    CHECK(reachable_to(chain({{0, 1, 0}, {2, 1, 0}}, 3), {0}) == std::vector<Vertex>{0});
}

TEST_CASE("gen_random")
{
    const auto g = gen_random({4, 4, 1, 1.0, 7});
    CHECK(g.all_owned_by(Owner::Alice));
    CHECK(g.graph().edge_count() == 4);
    CHECK(validate_game(g).empty());
    CHECK(serialize_instance(g) == serialize_instance(gen_random({4, 4, 1, 1.0, 7})));
    CHECK(serialize_instance(gen_random({6, 12, 3, 0.5, 1})) != serialize_instance(gen_random({6, 12, 3, 0.5, 2})));
    CHECK_THROWS_AS(gen_random({4, 3, 1, 0.5, 7}), ValidationError);
    CHECK_THROWS_AS(gen_random({4, 4, 0, 0.5, 7}), ValidationError);
    CHECK(gen_random({5, 10, 2, 0.0, 3}).all_owned_by(Owner::Bob));
}

TEST_CASE("gen_no_neg_cycle produces only nonnegative cycles")
{
    const auto small = gen_no_neg_cycle({2, 2, 1, 0.5, 1});
    CHECK(validate_game(small).empty());
    CHECK_FALSE(find_negative_cycle(small.graph()).has_value());

    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = 1 + seed % 6;
        const auto g = gen_no_neg_cycle({n, n + seed % 7, 1 + static_cast<Weight>(seed % 5), 0.5, seed});
        CHECK(validate_game(g).empty());
        for (const auto& c : simple_cycles(g.graph())) CHECK(path_weight(g.graph(), c) >= 0);
        for (Vertex s = 0; s < n; ++s) CHECK(std::holds_alternative<SsspResult>(bellman_ford(g.graph(), s)));
    }
}

TEST_CASE("format_reach")
{
    ReachMatrix r(2);
    r.set(0, 1);
    CHECK(format_reach(r) == "r 2\n01\n00\n");
    CHECK(format_reach(ReachMatrix(2)) == "r 2\n00\n00\n");
}
