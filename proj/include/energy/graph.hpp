#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace energy {

using Vertex = std::size_t;
using Weight = std::int64_t;
using EdgeId = std::size_t;

struct Edge {
    Vertex from;
    Vertex to;
    Weight weight;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Malformed instance text. Line numbers are 1-based; 0 means "end of input".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Input is well-formed but violates a structural invariant (weight bound,
// out-degree, vertex range).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An algorithm was asked to run outside its domain: wrong owners, negative
// cycle where none is allowed, brute-force budget exceeded.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A checked internal invariant failed. Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Immutable weighted digraph. Parallel edges and self-loops are allowed.
///
/// Edges keep their insertion order (edge ids index into edges()); out-edges
/// are additionally grouped per source for traversal. Within a source the
/// out-edge order is insertion order.
class Digraph {
public:
    Digraph() = default;
    Digraph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId id) const { return edges_.at(id); }

    /// Ids (into edges()) of the edges leaving v.
    std::span<const EdgeId> out_edge_ids(Vertex v) const noexcept
    {
        return {out_ids_.data() + offsets_[v], out_ids_.data() + offsets_[v + 1]};
    }
    std::size_t out_degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

    /// Largest |w| over all edges (0 for an edgeless graph).
    Weight max_abs_weight() const noexcept;

    /// Same vertex set, every edge flipped; weights optionally negated.
    Digraph reversed(bool negate_weights = false) const;

    /// Subgraph induced by `keep` (mask of size vertex_count()). Vertices are
    /// renumbered in ascending order; `old_of_new` receives the mapping.
    Digraph induced(const std::vector<bool>& keep, std::vector<Vertex>* old_of_new = nullptr) const;

    friend bool operator==(const Digraph& a, const Digraph& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<EdgeId> out_ids_;
};

enum class Owner : std::uint8_t { Alice, Bob };

/// Digraph plus a per-vertex owner and the declared weight bound W.
class GameGraph {
public:
    GameGraph() = default;
    /// Throws ValidationError if owners.size() != vertex count or W < 0.
    /// Weight bounds and out-degrees are checked by validate_game.
    GameGraph(Digraph graph, std::vector<Owner> owners, Weight max_weight);

    const Digraph& graph() const noexcept { return graph_; }
    std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
    Owner owner(Vertex v) const { return owners_.at(v); }
    std::span<const Owner> owners() const noexcept { return owners_; }
    Weight max_weight() const noexcept { return max_weight_; }

    bool all_owned_by(Owner who) const noexcept;

    friend bool operator==(const GameGraph&, const GameGraph&) = default;

private:
    Digraph graph_;
    std::vector<Owner> owners_;
    Weight max_weight_ = 0;
};

struct Violation {
    enum class Kind { NoOutEdge, WeightOutOfRange };
    Kind kind;
    Vertex vertex = 0;   // NoOutEdge
    EdgeId edge = 0;     // WeightOutOfRange
    std::string message;
};

/// Every vertex with out-degree 0 and every edge with |w| > W. Empty means
/// the graph is a legal game graph.
std::vector<Violation> validate_game(const GameGraph& g);

/// Throws ValidationError listing the violations, if any.
void require_valid_game(const GameGraph& g);

/// Minimum sufficient energy: a nonnegative integer or INFINITY.
///
/// INFINITY is a separate state, not a large number; it compares greater
/// than every finite value.
class Energy {
public:
    constexpr Energy() noexcept = default;
    explicit Energy(Weight value);

    static constexpr Energy infinity() noexcept
    {
        Energy e;
        e.infinite_ = true;
        return e;
    }

    constexpr bool is_infinite() const noexcept { return infinite_; }
    constexpr bool is_finite() const noexcept { return !infinite_; }
    /// Throws std::logic_error when infinite.
    Weight value() const;

    friend constexpr bool operator==(const Energy& a, const Energy& b) noexcept
    {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(const Energy& a, const Energy& b) noexcept
    {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }

    std::string to_string() const;

private:
    Weight value_ = 0;
    bool infinite_ = false;
};

/// Energy needed before taking an edge of weight w so that at least `after`
/// remains: max(after - w, 0), and INFINITY stays INFINITY.
Energy required_before(Energy after, Weight w) noexcept;

using EnergyFunction = std::vector<Energy>;

}  // namespace energy
