#pragma once

#include <span>
#include <string_view>

#include "diffgraph/graph.hpp"

namespace diffgraph {

/// One of the six worked difference graphs (three acyclic, three cyclic).
/// Exposure is X and outcome is Y throughout.
struct ReferenceGraph {
  std::string_view label;
  std::string_view edge_list;
  /// Whether the two populations share a topological ordering.
  bool shared_order;
};

std::span<const ReferenceGraph> reference_graphs();

/// Throws Error for an unknown label.
const ReferenceGraph& reference_graph(std::string_view label);

DifferenceGraph load(const ReferenceGraph& ref);

}  // namespace diffgraph
