#include "energy/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>

#include "energy/alice.hpp"
#include "energy/bob.hpp"
#include "energy/finite.hpp"
#include "energy/generate.hpp"

namespace energy {
namespace {

GameGraph instance_for(const BenchConfig& c, std::size_t m)
{
    GeneratorParams p{c.n, m, c.max_weight, 0.5, c.seed};
    switch (c.algo) {
    case BenchAlgo::AllAlice: p.owner_bias = 1.0; return gen_random(p);
    case BenchAlgo::AllBob: p.owner_bias = 0.0; return gen_random(p);
    case BenchAlgo::NoNegCycle: return gen_no_neg_cycle(p);
    case BenchAlgo::ValueIteration:
    case BenchAlgo::Fixpoint: return gen_random(p);
    }
    return gen_random(p);
}

// Runs the solver once and reports its iteration count.
std::size_t run_once(const BenchConfig& c, const GameGraph& g, std::size_t rounds)
{
    switch (c.algo) {
    case BenchAlgo::ValueIteration: value_iteration(g, rounds); return rounds;
    case BenchAlgo::NoNegCycle: solve_no_neg_cycles(g); return g.vertex_count();
    case BenchAlgo::Fixpoint: {
        FixpointStats stats;
        solve_fixpoint(g, &stats);
        return stats.sweeps;
    }
    case BenchAlgo::AllAlice: solve_all_alice(g); return 1;
    case BenchAlgo::AllBob: solve_all_bob(g); return 1;
    }
    return 0;
}

}  // namespace

std::string to_string(BenchAlgo algo)
{
    switch (algo) {
    case BenchAlgo::ValueIteration: return "value-iteration";
    case BenchAlgo::NoNegCycle: return "no-neg-cycle";
    case BenchAlgo::Fixpoint: return "fixpoint";
    case BenchAlgo::AllAlice: return "all-alice";
    case BenchAlgo::AllBob: return "all-bob";
    }
    return "unknown";
}

std::vector<BenchRow> run_bench(const BenchConfig& config)
{
    using clock = std::chrono::steady_clock;
    std::vector<BenchRow> rows;
    const std::size_t steps = std::max<std::size_t>(config.steps, 1);
    const std::size_t repeat = std::max<std::size_t>(config.repeat, 1);

    for (std::size_t step = 0; step < steps; ++step) {
        const std::size_t factor = std::size_t{1} << step;
        const std::size_t m = config.doubling == BenchConfig::Doubling::Edges ? config.m * factor : config.m;
        const std::size_t rounds =
            config.doubling == BenchConfig::Doubling::Rounds ? config.rounds * factor : config.rounds;
        const auto g = instance_for(config, m);

        std::vector<double> times;
        std::size_t iterations = 0;
        for (std::size_t r = 0; r < repeat; ++r) {
            const auto start = clock::now();
            iterations = run_once(config, g, rounds);
            times.push_back(std::chrono::duration<double>(clock::now() - start).count());
        }
        std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
        rows.push_back({to_string(config.algo), config.n, m, config.max_weight,
                        config.algo == BenchAlgo::ValueIteration ? rounds : 0, times[times.size() / 2], iterations});
    }
    return rows;
}

std::string format_bench(const std::vector<BenchRow>& rows)
{
    std::string out = "algo n m W rounds seconds iterations\n";
    char buf[256];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%s %zu %zu %lld %zu %.6f %zu\n", r.algo.c_str(), r.n, r.m,
                      static_cast<long long>(r.max_weight), r.rounds, r.median_seconds, r.iterations);
        out += buf;
    }
    return out;
}

}  // namespace energy
