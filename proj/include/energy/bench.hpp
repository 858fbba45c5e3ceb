#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "energy/graph.hpp"

namespace energy {

enum class BenchAlgo { ValueIteration, NoNegCycle, Fixpoint, AllAlice, AllBob };

struct BenchConfig {
    BenchAlgo algo = BenchAlgo::ValueIteration;
    std::size_t n = 1000;
    std::size_t m = 4000;
    Weight max_weight = 10;
    /// Round count for value iteration; ignored otherwise.
    std::size_t rounds = 100;
    std::uint64_t seed = 1;
    /// Timed runs per row; the row reports the median.
    std::size_t repeat = 5;
    /// Extra rows produced by doubling `doubling` (m or rounds) each step.
    enum class Doubling { None, Edges, Rounds } doubling = Doubling::None;
    std::size_t steps = 1;
};

struct BenchRow {
    std::string algo;
    std::size_t n = 0;
    std::size_t m = 0;
    Weight max_weight = 0;
    std::size_t rounds = 0;
    double median_seconds = 0.0;
    /// Rounds for value iteration, sweeps for fixpoint, n for no-neg-cycle.
    std::size_t iterations = 0;
};

/// Generates instances (outside the timed region) and times the solver.
std::vector<BenchRow> run_bench(const BenchConfig& config);

std::string format_bench(const std::vector<BenchRow>& rows);

std::string to_string(BenchAlgo algo);

}  // namespace energy
