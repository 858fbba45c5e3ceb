#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "energy/graph.hpp"
#include "energy/reach_matrix.hpp"

namespace energy {

// Instance files are line-oriented:
//
//   c <comment>          any number, anywhere
//   p eg <n> <m> <W>     exactly one, first non-comment line
//   o <v> <A|B>          one per vertex (game instances)
//   e <u> <v> <w>        exactly m lines
//
// Vertex ids are 1-based on disk and 0-based in memory.

enum class InstanceKind {
    Game,          // every vertex needs exactly one `o` line
    Reachability,  // `o` lines optional, missing owners default to Alice
};

GameGraph parse_instance(std::string_view text, InstanceKind kind = InstanceKind::Game);
GameGraph parse_instance(std::istream& in, InstanceKind kind = InstanceKind::Game);

/// Canonical form: header, owners ascending, edges in edge-id order, no comments.
std::string serialize_instance(const GameGraph& g);

/// `v <id> <value|inf>` per vertex, ids ascending.
std::string format_energy(const EnergyFunction& e);

/// `r <n>` followed by one row of '0'/'1' characters per vertex.
std::string format_reach(const ReachMatrix& r);

}  // namespace energy
