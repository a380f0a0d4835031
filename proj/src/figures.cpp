#include "diffgraph/figures.hpp"

#include <array>
#include <string>

#include "diffgraph/edge_list.hpp"

namespace diffgraph {

namespace {

constexpr std::array<ReferenceGraph, 6> kGraphs{{
    {"1c", "node X\nnode Y\n", true},
    {"1h", "node X\nnode Y\nnode W1\nnode W2\nW1 -> X\nX -> W2\nX -> Y\n", true},
    {"1m", "node X\nnode Y\nnode W1\nnode W2\nW1 -> X\nW2 -> Y\nX -> Y\n", true},
    {"2c", "node X\nnode Y\nX -> Y\nY -> X\n", false},
    {"2f", "node X\nnode Y\nnode W1\nnode W2\nW1 -> X\nX -> W2\nW2 -> Y\nY -> W2\nX -> Y\n", false},
    {"2k", "node X\nnode Y\nnode W1\nnode W2\nW1 -> X\nX -> W2\nW2 -> X\nW2 -> Y\nX -> Y\n", false},
}};

}  // namespace

std::span<const ReferenceGraph> reference_graphs() { return kGraphs; }

const ReferenceGraph& reference_graph(std::string_view label) {
  for (const auto& g : kGraphs) {
    if (g.label == label) return g;
  }
  throw Error("unknown reference graph '" + std::string(label) + "'");
}

DifferenceGraph load(const ReferenceGraph& ref) { return DifferenceGraph(parse_edge_list(ref.edge_list)); }

}  // namespace diffgraph
