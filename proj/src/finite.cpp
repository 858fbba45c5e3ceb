#include "energy/finite.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "energy/algorithms.hpp"

namespace energy {
namespace {

// Odometer over the out-edges of a fixed vertex list.
class StrategyCounter {
public:
    StrategyCounter(const GameGraph& g, Owner who) : g_(g)
    {
        strategy_.choice.assign(g.vertex_count(), std::nullopt);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (g.owner(v) != who) continue;
            if (g.graph().out_degree(v) == 0) throw PreconditionError("vertex without out-edges has no strategy");
            vertices_.push_back(v);
            strategy_.choice[v] = g.graph().out_edge_ids(v)[0];
        }
        position_.assign(vertices_.size(), 0);
    }

    const PositionalStrategy& current() const noexcept { return strategy_; }

    bool advance()
    {
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            const Vertex v = vertices_[i];
            const auto out = g_.graph().out_edge_ids(v);
            if (++position_[i] < out.size()) {
                strategy_.choice[v] = out[position_[i]];
                return true;
            }
            position_[i] = 0;
            strategy_.choice[v] = out[0];
        }
        return false;
    }

private:
    const GameGraph& g_;
    std::vector<Vertex> vertices_;
    std::vector<std::size_t> position_;
    PositionalStrategy strategy_;
};

void check_strategy(const GameGraph& g, const PositionalStrategy& s, Owner who, const char* name)
{
    if (s.choice.size() != g.vertex_count()) {
        throw PreconditionError(std::string(name) + " strategy has the wrong size");
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.owner(v) != who) continue;
        const auto& c = s.choice[v];
        if (!c) throw PreconditionError(std::string(name) + " strategy misses vertex " + std::to_string(v + 1));
        if (*c >= g.graph().edge_count() || g.graph().edge(*c).from != v) {
            throw PreconditionError(std::string(name) + " strategy picks a foreign edge at vertex " +
                                    std::to_string(v + 1));
        }
    }
}

Energy evaluate_unchecked(const GameGraph& g, const PositionalStrategy& alice, const PositionalStrategy& bob,
                          Vertex s, std::vector<std::size_t>& first_step, std::vector<Weight>& prefix_at)
{
    constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
    std::fill(first_step.begin(), first_step.end(), unseen);
    Weight prefix = 0;
    Weight lowest = 0;
    Vertex v = s;
    for (std::size_t step = 0;; ++step) {
        if (first_step[v] != unseen) {
            // the play is now periodic; the cycle is what repeats
            if (prefix - prefix_at[v] < 0) return Energy::infinity();
            return Energy(-lowest);
        }
        first_step[v] = step;
        prefix_at[v] = prefix;
        const EdgeId id = g.owner(v) == Owner::Alice ? *alice.choice[v] : *bob.choice[v];
        const auto& e = g.graph().edge(id);
        prefix += e.weight;
        lowest = std::min(lowest, prefix);
        v = e.to;
    }
}

std::uint64_t strategy_pairs(const GameGraph& g, std::uint64_t budget)
{
    std::uint64_t count = 1;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto d = g.graph().out_degree(v);
        if (d == 0) return 0;
        if (count > budget / d) return budget + 1;
        count *= d;
    }
    return count;
}

}  // namespace

std::vector<Weight> value_iteration_step(const GameGraph& g, std::span<const Weight> previous)
{
    const auto& graph = g.graph();
    const std::size_t n = graph.vertex_count();
    std::vector<Weight> next(n);
    for (Vertex u = 0; u < n; ++u) {
        const auto out = graph.out_edge_ids(u);
        const bool alice = g.owner(u) == Owner::Alice;
        Weight best = alice ? std::numeric_limits<Weight>::max() : std::numeric_limits<Weight>::min();
        for (EdgeId id : out) {
            const auto& e = graph.edge(id);
            const Weight candidate = previous[e.to] - e.weight;
            best = alice ? std::min(best, candidate) : std::max(best, candidate);
        }
        next[u] = std::max<Weight>(best, 0);
    }
    return next;
}

EnergyFunction value_iteration(const GameGraph& g, std::size_t rounds)
{
    require_valid_game(g);
    std::vector<Weight> e(g.vertex_count(), 0);
    for (std::size_t j = 0; j < rounds; ++j) e = value_iteration_step(g, e);
    EnergyFunction result;
    result.reserve(e.size());
    for (Weight x : e) result.emplace_back(x);
    return result;
}

EnergyFunction solve_no_neg_cycles(const GameGraph& g, NoNegCycleOptions options)
{
    if (options.verify) {
        if (auto cycle = find_negative_cycle(g.graph())) {
            std::ostringstream msg;
            msg << "graph has a negative cycle:";
            for (Vertex v : cycle->cycle) msg << ' ' << v + 1;
            msg << " (weight " << cycle_weight(g.graph(), cycle->cycle) << ')';
            throw PreconditionError(msg.str());
        }
    }
    return value_iteration(g, g.vertex_count());
}

EnergyFunction solve_fixpoint(const GameGraph& g, FixpointStats* stats)
{
    require_valid_game(g);
    const auto& graph = g.graph();
    const std::size_t n = graph.vertex_count();
    if (n == 0) return {};
    // finite minimum energies never exceed the worst prefix of a simple path
    const Weight cap = static_cast<Weight>(n - 1) * g.max_weight();
    const std::size_t sweep_limit = n * (static_cast<std::size_t>(cap) + 2);

    EnergyFunction current(n, Energy(0));
    EnergyFunction next(n);
    std::size_t sweeps = 0;
    while (true) {
        if (++sweeps > sweep_limit) throw InternalError("fixpoint iteration exceeded its sweep bound");
        for (Vertex u = 0; u < n; ++u) {
            const bool alice = g.owner(u) == Owner::Alice;
            std::optional<Energy> best;
            for (EdgeId id : graph.out_edge_ids(u)) {
                const auto& e = graph.edge(id);
                const Energy candidate = required_before(current[e.to], e.weight);
                if (!best || (alice ? candidate < *best : candidate > *best)) best = candidate;
            }
            next[u] = best->is_finite() && best->value() > cap ? Energy::infinity() : *best;
        }
        if (next == current) break;
        std::swap(current, next);
    }
    if (stats) stats->sweeps = sweeps;
    return current;
}

Energy evaluate_strategies(const GameGraph& g, const PositionalStrategy& alice, const PositionalStrategy& bob,
                           Vertex s)
{
    if (s >= g.vertex_count()) throw std::out_of_range("start vertex out of range");
    check_strategy(g, alice, Owner::Alice, "Alice");
    check_strategy(g, bob, Owner::Bob, "Bob");
    std::vector<std::size_t> first_step(g.vertex_count());
    std::vector<Weight> prefix_at(g.vertex_count());
    return evaluate_unchecked(g, alice, bob, s, first_step, prefix_at);
}

std::vector<PositionalStrategy> enumerate_strategies(const GameGraph& g, Owner who)
{
    StrategyCounter counter(g, who);
    std::vector<PositionalStrategy> all;
    do {
        all.push_back(counter.current());
    } while (counter.advance());
    return all;
}

EnergyFunction brute_force(const GameGraph& g, std::uint64_t budget)
{
    require_valid_game(g);
    const std::size_t n = g.vertex_count();
    const auto pairs = strategy_pairs(g, budget);
    if (pairs > budget) {
        throw PreconditionError("brute force needs more than " + std::to_string(budget) +
                                " strategy pairs; shrink the instance");
    }

    std::vector<std::size_t> first_step(n);
    std::vector<Weight> prefix_at(n);
    EnergyFunction best(n, Energy::infinity());
    EnergyFunction worst(n);

    StrategyCounter alice(g, Owner::Alice);
    do {
        std::fill(worst.begin(), worst.end(), Energy(0));
        StrategyCounter bob(g, Owner::Bob);
        do {
            for (Vertex s = 0; s < n; ++s) {
                worst[s] = std::max(worst[s],
                                    evaluate_unchecked(g, alice.current(), bob.current(), s, first_step, prefix_at));
            }
        } while (bob.advance());
        for (Vertex s = 0; s < n; ++s) best[s] = std::min(best[s], worst[s]);
    } while (alice.advance());
    return best;
}

PositionalStrategy extract_alice_strategy(const GameGraph& g, const EnergyFunction& e)
{
    const auto& graph = g.graph();
    if (e.size() != g.vertex_count()) throw PreconditionError("energy function has the wrong size");

    PositionalStrategy sigma;
    sigma.choice.assign(g.vertex_count(), std::nullopt);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (g.owner(u) != Owner::Alice) continue;
        std::vector<EdgeId> out(graph.out_edge_ids(u).begin(), graph.out_edge_ids(u).end());
        if (out.empty()) throw PreconditionError("vertex " + std::to_string(u + 1) + " has no out-edge");
        std::stable_sort(out.begin(), out.end(),
                         [&](EdgeId a, EdgeId b) { return graph.edge(a).to < graph.edge(b).to; });
        if (e[u].is_infinite()) {
            sigma.choice[u] = out.front();
            continue;
        }
        for (EdgeId id : out) {
            const auto& edge = graph.edge(id);
            if (e[edge.to].is_finite() && e[u].value() + edge.weight >= e[edge.to].value()) {
                sigma.choice[u] = id;
                break;
            }
        }
        if (!sigma.choice[u]) {
            throw PreconditionError("energy function is not a fixpoint at vertex " + std::to_string(u + 1));
        }
    }
    return sigma;
}

}  // namespace energy
