#include "energy/graph.hpp"

#include <algorithm>
#include <sstream>

namespace energy {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line)
{
}

Digraph::Digraph(std::size_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges))
{
    offsets_.assign(n_ + 1, 0);
    for (const auto& e : edges_) {
        if (e.from >= n_ || e.to >= n_) {
            throw ValidationError("edge endpoint out of range: (" + std::to_string(e.from) + ", " +
                                  std::to_string(e.to) + ") with n = " + std::to_string(n_));
        }
        ++offsets_[e.from + 1];
    }
    for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];

    // counting sort keeps insertion order within each source
    out_ids_.resize(edges_.size());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (EdgeId id = 0; id < edges_.size(); ++id) out_ids_[cursor[edges_[id].from]++] = id;
}

Weight Digraph::max_abs_weight() const noexcept
{
    Weight best = 0;
    for (const auto& e : edges_) best = std::max(best, e.weight < 0 ? -e.weight : e.weight);
    return best;
}

Digraph Digraph::reversed(bool negate_weights) const
{
    std::vector<Edge> flipped;
    flipped.reserve(edges_.size());
    for (const auto& e : edges_) flipped.push_back({e.to, e.from, negate_weights ? -e.weight : e.weight});
    return Digraph(n_, std::move(flipped));
}

Digraph Digraph::induced(const std::vector<bool>& keep, std::vector<Vertex>* old_of_new) const
{
    std::vector<Vertex> new_of_old(n_, 0);
    std::vector<Vertex> mapping;
    for (Vertex v = 0; v < n_; ++v) {
        if (keep[v]) {
            new_of_old[v] = mapping.size();
            mapping.push_back(v);
        }
    }
    std::vector<Edge> kept;
    for (const auto& e : edges_) {
        if (keep[e.from] && keep[e.to]) kept.push_back({new_of_old[e.from], new_of_old[e.to], e.weight});
    }
    Digraph result(mapping.size(), std::move(kept));
    if (old_of_new) *old_of_new = std::move(mapping);
    return result;
}

GameGraph::GameGraph(Digraph graph, std::vector<Owner> owners, Weight max_weight)
    : graph_(std::move(graph)), owners_(std::move(owners)), max_weight_(max_weight)
{
    if (owners_.size() != graph_.vertex_count()) {
        throw ValidationError("owner count " + std::to_string(owners_.size()) +
                              " does not match vertex count " + std::to_string(graph_.vertex_count()));
    }
    if (max_weight_ < 0) throw ValidationError("weight bound W must be nonnegative");
}

bool GameGraph::all_owned_by(Owner who) const noexcept
{
    return std::all_of(owners_.begin(), owners_.end(), [who](Owner o) { return o == who; });
}

std::vector<Violation> validate_game(const GameGraph& g)
{
    std::vector<Violation> found;
    const auto& graph = g.graph();
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
        if (graph.out_degree(v) == 0) {
            found.push_back({Violation::Kind::NoOutEdge, v, 0,
                             "vertex " + std::to_string(v + 1) + " has out-degree 0"});
        }
    }
    const auto edges = graph.edges();
    for (EdgeId id = 0; id < edges.size(); ++id) {
        const Weight w = edges[id].weight;
        if (w > g.max_weight() || w < -g.max_weight()) {
            found.push_back({Violation::Kind::WeightOutOfRange, edges[id].from, id,
                             "edge " + std::to_string(id + 1) + " weight " + std::to_string(w) +
                                 " outside [-W, W]"});
        }
    }
    return found;
}

void require_valid_game(const GameGraph& g)
{
    const auto violations = validate_game(g);
    if (violations.empty()) return;
    std::ostringstream msg;
    msg << "invalid game graph:";
    for (const auto& v : violations) msg << "\n  " << v.message;
    throw ValidationError(msg.str());
}

Energy::Energy(Weight value) : value_(value)
{
    if (value < 0) throw std::invalid_argument("energy must be nonnegative, got " + std::to_string(value));
}

Weight Energy::value() const
{
    if (infinite_) throw std::logic_error("value() of infinite energy");
    return value_;
}

std::string Energy::to_string() const
{
    return infinite_ ? "inf" : std::to_string(value_);
}

Energy required_before(Energy after, Weight w) noexcept
{
    if (after.is_infinite()) return after;
    return Energy(std::max<Weight>(after.value() - w, 0));
}

}  // namespace energy
