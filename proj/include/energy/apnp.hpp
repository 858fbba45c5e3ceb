#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "energy/graph.hpp"
#include "energy/reach_matrix.hpp"

namespace energy {

// All-pairs nonnegative prefix paths (APNP): for every ordered pair (u, v),
// is there a non-empty walk from u to v all of whose prefixes have weight
// >= 0?
//
// Pipeline for weights in {-1, 0, +1}:
//   split_zero_edges -> dyck_reachability -> build_g2 -> transitive_closure
// General weights are first expanded with expand_weights.

struct SplitGraph {
    /// Vertices [0, n) are the original ones; split vertices follow.
    Digraph graph;
    std::size_t original_count = 0;
    /// split_of[u] = the split vertex u' if u had a zero out-edge.
    std::vector<std::optional<Vertex>> split_of;
};

/// Replace zero edges: each u with a zero out-edge gets one fresh u' and an
/// edge (u, u', +1); every zero edge (u, v) becomes (u', v, -1).
/// Throws PreconditionError on weights outside {-1, 0, +1}.
SplitGraph split_zero_edges(const Digraph& g);

struct DyckRelations {
    /// Possibly-empty Dyck path; reflexive.
    ReachMatrix reach;
    /// Non-empty Dyck path.
    ReachMatrix nonempty;
};

/// One-bracket Dyck reachability by worklist saturation. Weights must be +-1.
DyckRelations dyck_reachability(const Digraph& g);

/// Unweighted graph on the original vertices: (u, v) iff a non-empty Dyck
/// path u -> v exists in `split` or g_original has an edge (u, v) with w >= 0.
Digraph build_g2(const Digraph& g_original, const SplitGraph& split, const DyckRelations& dyck);

/// Off-diagonal: a path with >= 1 edge. Diagonal: a closed walk with >= 1 edge.
ReachMatrix transitive_closure(const Digraph& g);

/// APNP for weights in {-1, 0, +1}.
ReachMatrix apnp_small(const Digraph& g);

struct GadgetLevel {
    Vertex original;
    Weight level;
};

struct GadgetMap {
    std::size_t max_weight = 0;
    /// origin[v] = v^0 in the expanded graph.
    std::vector<Vertex> origin;
    /// level[x] = (v, i) with x = v^i.
    std::vector<GadgetLevel> level;
};

struct ExpandedGraph {
    Digraph graph;
    GadgetMap map;
};

/// Replace each vertex by 2W+1 copies v^{-W..W} on an ascending +1 chain and
/// a descending -1 chain out of v^0; edge (u, v, k) becomes (u^k, v^0, 0).
/// Throws ValidationError if some |w| > W.
ExpandedGraph expand_weights(const Digraph& g, Weight max_weight);

/// APNP for weights in [-W, W].
ReachMatrix apnp(const Digraph& g, Weight max_weight);

/// Independent reference: per-source search over (vertex, energy) states with
/// energy saturating at n*W.
ReachMatrix apnp_oracle(const Digraph& g, Weight max_weight);

}  // namespace energy
