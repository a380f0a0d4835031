#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diffgraph/errors.hpp"

namespace diffgraph {

/// Variable label. Non-empty, case-sensitive, no whitespace and no commas.
class VariableId {
 public:
  explicit VariableId(std::string name);

  const std::string& str() const noexcept { return name_; }

  friend auto operator<=>(const VariableId&, const VariableId&) = default;

  static bool is_valid(std::string_view name) noexcept;

 private:
  std::string name_;
};

using Vertex = std::size_t;

/// Sorted (by vertex index, i.e. declaration order) set of vertices.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex tail;
  Vertex head;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable directed graph over named vertices. Vertex indices follow the
/// order in which names were declared; edges are kept sorted and unique.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  DirectedGraph(std::vector<VariableId> vertices, std::vector<Edge> edges);

  std::size_t size() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<VariableId>& vertices() const noexcept { return names_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::string& name(Vertex v) const;

  std::optional<Vertex> find(std::string_view name) const;
  /// Throws UnknownVertex when absent.
  Vertex index_of(std::string_view name) const;

  bool has_edge(Vertex tail, Vertex head) const;
  std::span<const Vertex> parents(Vertex v) const;
  std::span<const Vertex> children(Vertex v) const;

  void check_vertex(Vertex v) const;
  bool same_vertices(const DirectedGraph& other) const noexcept { return names_ == other.names_; }

  std::vector<std::string> names_of(std::span<const Vertex> set) const;

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VariableId> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> parents_;
  std::vector<std::vector<Vertex>> children_;
};

/// Edge X->Y asserts a mechanism change at Y with respect to X. Cycles allowed.
class DifferenceGraph : public DirectedGraph {
 public:
  using DirectedGraph::DirectedGraph;
  DifferenceGraph() = default;
  explicit DifferenceGraph(DirectedGraph g) : DirectedGraph(std::move(g)) {}
};

/// Acyclic directed graph; acyclicity is checked on construction.
class CausalDag : public DirectedGraph {
 public:
  CausalDag() = default;
  CausalDag(std::vector<VariableId> vertices, std::vector<Edge> edges);
  explicit CausalDag(DirectedGraph g);

  const std::vector<Vertex>& topological_order() const noexcept { return order_; }

  CausalDag without_edge(Edge e) const;

 private:
  std::vector<Vertex> order_;
};

/// Reflexive: the result always contains v.
VertexSet ancestors(const DirectedGraph& g, Vertex v);
/// Reflexive: the result always contains v.
VertexSet descendants(const DirectedGraph& g, Vertex v);

bool is_ancestor(const DirectedGraph& g, Vertex candidate, Vertex of);

bool is_acyclic(const DirectedGraph& g);

/// Kahn's algorithm; empty optional if g has a cycle. Ties break on the
/// smallest vertex index so the order is deterministic.
std::optional<std::vector<Vertex>> topological_order(const DirectedGraph& g);

/// True iff a single ordering is topological for both DAGs, i.e. the edge
/// union is acyclic.
bool shares_topological_order(const CausalDag& g1, const CausalDag& g2);

/// Reachability ("Bayes-ball") d-separation test of x and y given w.
bool d_separated(const CausalDag& g, Vertex x, Vertex y, std::span<const Vertex> w);

VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool contains(const VertexSet& s, Vertex v);

}  // namespace diffgraph
