#pragma once

#include <utility>
#include <vector>

#include "energy/graph.hpp"

namespace energy {

struct NegTriangleInstance {
    /// Five layers of the input vertices: v^i has id (i-1)*n + v.
    Digraph graph;
    Weight max_weight = 1;
    /// (v^1, v^5) for every input vertex v.
    std::vector<std::pair<Vertex, Vertex>> queries;
};

/// Layered APNP instance that has a nonnegative prefix path v^1 -> v^5 for
/// some v iff the input has a negative triangle. Edge (u, v, w) becomes
/// (u^i, v^{i+1}, -w) for i = 1..3, and each v gets (v^4, v^5, -1).
/// Throws PreconditionError on self-loops.
NegTriangleInstance neg_triangle_to_apnp(const Digraph& g);

bool has_negative_triangle_via_apnp(const Digraph& g);

/// Exhaustive scan over ordered triples of distinct vertices.
bool brute_force_neg_triangle(const Digraph& g);

}  // namespace energy
