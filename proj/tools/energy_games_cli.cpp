// energy-games: solve, generate, and benchmark energy games from the command line.
//
// Exit codes: 0 success, 1 internal error or failed check, 2 malformed input
// or usage, 3 precondition violated (algorithm does not apply to the instance).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "energy/alice.hpp"
#include "energy/apnp.hpp"
#include "energy/bench.hpp"
#include "energy/bob.hpp"
#include "energy/finite.hpp"
#include "energy/generate.hpp"
#include "energy/io.hpp"
#include "energy/reductions.hpp"

namespace {

using namespace energy;

constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;

GameGraph read_instance(const std::string& path, InstanceKind kind)
{
    if (path.empty() || path == "-") return parse_instance(std::cin, kind);
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    return parse_instance(in, kind);
}

struct SolveOptions {
    std::string algo = "auto";
    std::optional<std::size_t> rounds;
    bool verify = false;
    std::uint64_t budget = kDefaultBruteForceBudget;
    std::string input;
};

int cmd_solve(const SolveOptions& o)
{
    if ((o.algo == "rounds") != o.rounds.has_value()) {
        std::cerr << "error: --rounds is required with --algo rounds and only allowed there\n";
        return kExitInput;
    }
    const auto g = read_instance(o.input, InstanceKind::Game);
    require_valid_game(g);

    EnergyFunction e;
    if (o.algo == "auto") {
        if (g.all_owned_by(Owner::Alice)) {
            e = solve_all_alice(g);
        } else if (g.all_owned_by(Owner::Bob)) {
            e = solve_all_bob(g);
        } else {
            e = solve_fixpoint(g);
        }
    } else if (o.algo == "all-alice") {
        e = solve_all_alice(g);
    } else if (o.algo == "all-bob") {
        e = solve_all_bob(g);
    } else if (o.algo == "no-neg-cycle") {
        e = solve_no_neg_cycles(g, {o.verify});
    } else if (o.algo == "fixpoint") {
        e = solve_fixpoint(g);
    } else if (o.algo == "brute") {
        e = brute_force(g, o.budget);
    } else {
        e = value_iteration(g, *o.rounds);
    }
    std::cout << format_energy(e);
    return 0;
}

int cmd_apnp(const std::string& algo, const std::string& input)
{
    const auto g = read_instance(input, InstanceKind::Reachability);
    const auto reach = algo == "oracle" ? apnp_oracle(g.graph(), g.max_weight()) : apnp(g.graph(), g.max_weight());
    std::cout << format_reach(reach);
    return 0;
}

struct GenOptions {
    std::string type = "random";
    std::size_t n = 10;
    std::size_t m = 20;
    Weight max_weight = 5;
    std::uint64_t seed = 1;
    double owner_bias = 0.5;
};

int cmd_gen(const GenOptions& o)
{
    GeneratorParams p{o.n, o.m, o.max_weight, o.owner_bias, o.seed};
    GameGraph g;
    if (o.type == "random") {
        g = gen_random(p);
    } else if (o.type == "no-neg-cycle") {
        g = gen_no_neg_cycle(p);
    } else if (o.type == "all-alice") {
        p.owner_bias = 1.0;
        g = gen_random(p);
    } else if (o.type == "all-bob") {
        p.owner_bias = 0.0;
        g = gen_random(p);
    } else {
        g = gen_complete(o.n, o.max_weight, o.seed);
    }
    std::cout << serialize_instance(g);
    return 0;
}

struct CheckOptions {
    std::string input;
    std::size_t count = 100;
    std::size_t n = 6;
    Weight max_weight = 10;
    std::uint64_t seed = 1;
};

int cmd_check_reduction(const CheckOptions& o)
{
    std::size_t disagreements = 0;
    std::size_t total = 0;
    auto check = [&](const Digraph& g) {
        ++total;
        const bool via_apnp = has_negative_triangle_via_apnp(g);
        const bool direct = brute_force_neg_triangle(g);
        if (via_apnp != direct) {
            ++disagreements;
            std::cerr << "disagreement on instance " << total << ": apnp=" << via_apnp << " brute=" << direct << '\n';
        }
    };
    if (!o.input.empty()) {
        check(read_instance(o.input, InstanceKind::Reachability).graph());
    } else {
        for (std::size_t i = 0; i < o.count; ++i) check(gen_complete(o.n, o.max_weight, o.seed + i).graph());
    }
    std::cout << "instances " << total << " disagreements " << disagreements << '\n';
    return disagreements == 0 ? 0 : kExitInternal;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Energy game solvers, APNP, and instance tools"};
    app.require_subcommand(1);

    SolveOptions solve;
    auto* solve_cmd = app.add_subcommand("solve", "Minimum sufficient energy of every vertex");
    solve_cmd->add_option("--algo", solve.algo, "Solver")
        ->check(CLI::IsMember({"auto", "all-alice", "all-bob", "no-neg-cycle", "fixpoint", "brute", "rounds"}));
    solve_cmd->add_option("--rounds", solve.rounds, "Round count for --algo rounds");
    solve_cmd->add_flag("--verify", solve.verify, "Check the no-negative-cycle precondition first");
    solve_cmd->add_option("--budget", solve.budget, "Strategy-pair budget for --algo brute");
    solve_cmd->add_option("--in", solve.input, "Instance file (default: standard input)");

    std::string apnp_algo = "dyck";
    std::string apnp_input;
    auto* apnp_cmd = app.add_subcommand("apnp", "All-pairs nonnegative prefix path reachability");
    apnp_cmd->add_option("--algo", apnp_algo, "dyck pipeline or state-space oracle")
        ->check(CLI::IsMember({"dyck", "oracle"}));
    apnp_cmd->add_option("--in", apnp_input, "Instance file (default: standard input)");

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
    gen_cmd->add_option("--type", gen.type, "Instance family")
        ->check(CLI::IsMember({"random", "no-neg-cycle", "all-alice", "all-bob", "neg-triangle"}));
    gen_cmd->add_option("--n", gen.n, "Vertices");
    gen_cmd->add_option("--m", gen.m, "Edges (ignored for neg-triangle)");
    gen_cmd->add_option("--W", gen.max_weight, "Maximum absolute weight");
    gen_cmd->add_option("--seed", gen.seed, "Random seed");
    gen_cmd->add_option("--owner-bias", gen.owner_bias, "Probability a vertex is Alice's");

    BenchConfig bench;
    std::string bench_algo = "value-iteration";
    std::string doubling = "none";
    auto* bench_cmd = app.add_subcommand("bench", "Time a solver on generated instances");
    bench_cmd->add_option("--algo", bench_algo, "Solver")
        ->check(CLI::IsMember({"value-iteration", "no-neg-cycle", "fixpoint", "all-alice", "all-bob"}));
    bench_cmd->add_option("--n", bench.n, "Vertices");
    bench_cmd->add_option("--m", bench.m, "Edges");
    bench_cmd->add_option("--W", bench.max_weight, "Maximum absolute weight");
    bench_cmd->add_option("--rounds", bench.rounds, "Rounds for value-iteration");
    bench_cmd->add_option("--seed", bench.seed, "Random seed");
    bench_cmd->add_option("--repeat", bench.repeat, "Timed runs per row (median reported)");
    bench_cmd->add_option("--double", doubling, "Parameter doubled between rows")
        ->check(CLI::IsMember({"none", "m", "rounds"}));
    bench_cmd->add_option("--steps", bench.steps, "Number of rows");

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check-reduction", "Compare the APNP negative-triangle detector with brute force");
    check_cmd->add_option("--in", check.input, "Single instance file instead of generated ones");
    check_cmd->add_option("--count", check.count, "Generated complete digraphs");
    check_cmd->add_option("--n", check.n, "Vertices per generated digraph");
    check_cmd->add_option("--W", check.max_weight, "Maximum absolute weight");
    check_cmd->add_option("--seed", check.seed, "First seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*solve_cmd) return cmd_solve(solve);
        if (*apnp_cmd) return cmd_apnp(apnp_algo, apnp_input);
        if (*gen_cmd) return cmd_gen(gen);
        if (*bench_cmd) {
            static const std::map<std::string, BenchAlgo> algos{
                {"value-iteration", BenchAlgo::ValueIteration}, {"no-neg-cycle", BenchAlgo::NoNegCycle},
                {"fixpoint", BenchAlgo::Fixpoint},              {"all-alice", BenchAlgo::AllAlice},
                {"all-bob", BenchAlgo::AllBob}};
            bench.algo = algos.at(bench_algo);
            bench.doubling = doubling == "m"        ? BenchConfig::Doubling::Edges
                             : doubling == "rounds" ? BenchConfig::Doubling::Rounds
                                                    : BenchConfig::Doubling::None;
            std::cout << format_bench(run_bench(bench));
            return 0;
        }
        if (*check_cmd) return cmd_check_reduction(check);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitInput;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return 0;
}
