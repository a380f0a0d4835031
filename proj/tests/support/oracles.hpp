#pragma once

// Test-only reference implementations. Nothing here calls into the code path
// it is used to check.

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "diffgraph/graph.hpp"
#include "diffgraph/simulate.hpp"

namespace diffgraph::testing {

using Rng = std::mt19937_64;

/// d-separation by enumerating every simple path between x and y and
/// checking the blocking rule on each one.
bool d_separated_by_paths(const CausalDag& g, Vertex x, Vertex y, const std::vector<Vertex>& w);

/// P(y|do(x)) by summing the truncated factorization over every joint state.
Eigen::MatrixXd exact_interventional(const DiscreteNetwork& net, Vertex x, Vertex y);

/// Vertex names V0, V1, ...
std::vector<VariableId> numbered_vertices(std::size_t n);

/// Random DAG: random vertex order, each forward pair kept with probability p.
CausalDag random_dag(std::size_t n, double p, Rng& rng);

/// Random directed graph without self-loops; cycles allowed.
DifferenceGraph random_digraph(std::size_t n, double p, Rng& rng);

/// Difference graph on n vertices from a bitmask over ordered pairs (u, v),
/// u != v, in row-major order.
DifferenceGraph digraph_from_code(std::size_t n, std::uint32_t code);

std::vector<Vertex> random_subset(const std::vector<Vertex>& from, Rng& rng);

}  // namespace diffgraph::testing
