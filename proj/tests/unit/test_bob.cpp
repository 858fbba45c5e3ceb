#include <doctest.h>

#include "energy/bob.hpp"
#include "energy/finite.hpp"
#include "support/oracles.hpp"

using namespace energy;
using namespace energy::testing;

namespace {

GameGraph bob_game(std::size_t n, std::vector<Edge> edges, Weight W)
{
    return GameGraph(Digraph(n, std::move(edges)), std::vector<Owner>(n, Owner::Bob), W);
}

}  // namespace

TEST_CASE("infinite_energy_set examples")
{
    // 0 -> 1 -> 2 <-> 3 with a negative 2-3 cycle; 4 is a safe loop
    const auto g = bob_game(5, {{0, 1, 1}, {1, 2, 0}, {2, 3, -1}, {3, 2, 0}, {4, 4, 0}, {1, 4, -2}}, 2);
    CHECK(infinite_energy_set(g) == std::vector<Vertex>{0, 1, 2, 3});

    CHECK(infinite_energy_set(bob_game(1, {{0, 0, -1}}, 1)) == std::vector<Vertex>{0});
    CHECK(infinite_energy_set(bob_game(2, {{0, 1, -1}, {1, 1, 0}}, 1)).empty());
    CHECK_THROWS_AS(infinite_energy_set(GameGraph(Digraph(1, {{0, 0, 0}}), {Owner::Alice}, 0)),
                    PreconditionError);
}

TEST_CASE("solve_all_bob examples")
{
    // chain 0 -> 1 -> 2 -> 2, Bob walks the whole chain
    const auto chain = bob_game(3, {{0, 1, -2}, {1, 2, -1}, {2, 2, 0}}, 2);
    CHECK(worst_simple_path_deficit(chain.graph(), 0) == 3);
    CHECK(solve_all_bob(chain) == EnergyFunction{Energy(3), Energy(1), Energy(0)});

    // a positive edge after the drop does not help: the worst prefix counts
    const auto dip = bob_game(3, {{0, 1, -2}, {1, 2, 2}, {2, 2, 0}}, 2);
    CHECK(solve_all_bob(dip) == EnergyFunction{Energy(2), Energy(0), Energy(0)});

    // Bob picks the worse branch
    const auto fork = bob_game(3, {{0, 1, -1}, {0, 2, -2}, {1, 1, 0}, {2, 2, 1}}, 2);
    CHECK(solve_all_bob(fork) == EnergyFunction{Energy(2), Energy(0), Energy(0)});

    const auto doomed = bob_game(2, {{0, 1, 1}, {1, 1, -1}}, 1);
    CHECK(solve_all_bob(doomed) == EnergyFunction(2, Energy::infinity()));

    CHECK_THROWS_AS(solve_all_bob(bob_game(2, {{0, 1, 0}}, 0)), ValidationError);
}

TEST_CASE("all-Bob solver matches cycle and path enumeration")
{
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const std::size_t n = 1 + seed % 8;
        const Weight W = 1 + static_cast<Weight>(seed % 4);
        const auto g = random_game(n, seed % 10, W, seed * 13 + 2, Owner::Bob);
        const auto e = solve_all_bob(g);
        const auto losing = reaches_negative_cycle(g.graph());
        for (Vertex v = 0; v < n; ++v) {
            CHECK(e[v].is_infinite() == losing[v]);
            if (!losing[v]) CHECK(e[v].value() == worst_simple_path_deficit(g.graph(), v));
        }
        CHECK(same_energies(e, energy_by_safety_game(g)));
        CHECK(e == solve_fixpoint(g));
        if (n <= 5) CHECK(e == brute_force(g));
    }
}

TEST_CASE("all-Bob finite values stay below (n-1)W")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t n = 2 + seed % 30;
        const auto g = random_game(n, 2 * n, 5, seed + 99, Owner::Bob);
        for (const auto& e : solve_all_bob(g)) {
            if (e.is_finite()) CHECK(e.value() <= static_cast<Weight>(n - 1) * 5);
        }
    }
}
