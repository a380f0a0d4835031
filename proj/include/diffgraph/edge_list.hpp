#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "diffgraph/graph.hpp"

namespace diffgraph {

// Edge-list text format, one item per line:
//
//   # comment
//   node W1
//   W1 -> X
//
// Vertices may also be declared implicitly by the edges that mention them.
// Vertex order is the order of first appearance.

DirectedGraph parse_edge_list(std::istream& in);
DirectedGraph parse_edge_list(std::string_view text);
DirectedGraph read_edge_list(const std::filesystem::path& path);

/// Writes every vertex as a `node` line followed by the edges, so the
/// declaration order survives a round trip.
void write_edge_list(std::ostream& out, const DirectedGraph& g);
std::string to_edge_list(const DirectedGraph& g);

}  // namespace diffgraph
