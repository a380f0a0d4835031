#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "diffgraph/graph.hpp"
#include "diffgraph/identify.hpp"

namespace diffgraph {

/// Exhaustive enumeration is capped at this many vertices.
inline constexpr std::size_t kOracleVertexCap = 5;

/// Two causal DAGs whose mechanism differences reproduce a difference graph.
/// Compatibility is structural: every edge of D is present in at least one
/// DAG, and every non-edge of D is present in both DAGs or in neither.
struct CompatiblePair {
  CausalDag g1;
  CausalDag g2;
};

bool is_compatible_pair(const DifferenceGraph& d, const CausalDag& g1, const CausalDag& g2, bool shared_order);

/// Every DAG that occurs in some compatible pair, in a fixed total order.
std::vector<CausalDag> enumerate_compatible_dags(const DifferenceGraph& d, bool shared_order);

/// Calls `visit` on every ordered compatible pair. Enumeration order is
/// deterministic.
void for_each_compatible_pair(const DifferenceGraph& d, bool shared_order,
                              const std::function<void(const CausalDag&, const CausalDag&)>& visit);

std::size_t count_compatible_pairs(const DifferenceGraph& d, bool shared_order);
/// The index-th ordered pair in for_each_compatible_pair order.
CompatiblePair nth_compatible_pair(const DifferenceGraph& d, bool shared_order, std::size_t index);

/// Back-door criterion relative to (x, y): no member of w is a strict
/// descendant of x, and w blocks every path between x and y that starts with
/// an arrow into x.
bool satisfies_back_door(const CausalDag& g, Vertex x, Vertex y, std::span<const Vertex> w);

/// Single-door criterion relative to the path coefficient of x -> y: no
/// member of w is a descendant of y, and w d-separates x and y once the edge
/// x -> y is deleted.
bool satisfies_single_door(const CausalDag& g, Vertex x, Vertex y, std::span<const Vertex> w);

struct OracleVerdict {
  IdentificationVerdict verdict;
  /// For NotIdentifiable: compatible DAGs whose admissible adjustment sets
  /// have an empty common intersection. Usually two DAGs; a single DAG when
  /// it admits no adjustment set at all.
  std::vector<CausalDag> witness;
};

OracleVerdict oracle_total(const DifferenceGraph& d, Vertex x, Vertex y, bool shared_order);
OracleVerdict oracle_direct(const DifferenceGraph& d, Vertex x, Vertex y, bool shared_order);
OracleVerdict oracle(const DifferenceGraph& d, Vertex x, Vertex y, bool shared_order, Quantity quantity);

/// Variant reusing a precomputed compatible set (as returned by
/// enumerate_compatible_dags), for batch checks over many (x, y) queries.
OracleVerdict oracle(const DifferenceGraph& d, std::span<const CausalDag> compatible, Vertex x, Vertex y,
                     Quantity quantity);

}  // namespace diffgraph
