#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "diffgraph/graph.hpp"

namespace diffgraph {

enum class Quantity { Total, Direct };

enum class VerdictKind { NullEffect, AdjustmentIdentifiable, NotIdentifiable };

/// Clause that produced a verdict. A/B decide total effects, C/D direct
/// effects; A and C assume a shared topological ordering, B and D do not.
enum class Condition { A1, A2, B1, B2, C1, C2, D1, D2, None };

std::string_view to_string(Quantity q);
std::string_view to_string(VerdictKind k);
std::string_view to_string(Condition c);

struct IdentificationVerdict {
  Quantity quantity = Quantity::Total;
  VerdictKind kind = VerdictKind::NotIdentifiable;
  /// Present iff kind == AdjustmentIdentifiable.
  std::optional<VertexSet> adjustment_set;
  std::string formula;
  Condition condition = Condition::None;

  bool identifiable() const noexcept { return kind != VerdictKind::NotIdentifiable; }

  friend bool operator==(const IdentificationVerdict&, const IdentificationVerdict&) = default;
};

/// Causal query against a difference graph. When `shared_order_assumed` is
/// set, the graph must be acyclic (a shared ordering of both causal DAGs
/// makes the difference graph a DAG).
class EffectQuery {
 public:
  EffectQuery(DifferenceGraph graph, Vertex exposure, Vertex outcome, bool shared_order_assumed);
  EffectQuery(DifferenceGraph graph, std::string_view exposure, std::string_view outcome,
              bool shared_order_assumed);

  const DifferenceGraph& graph() const noexcept { return graph_; }
  Vertex exposure() const noexcept { return exposure_; }
  Vertex outcome() const noexcept { return outcome_; }
  bool shared_order_assumed() const noexcept { return shared_order_; }

 private:
  DifferenceGraph graph_;
  Vertex exposure_;
  Vertex outcome_;
  bool shared_order_;
};

/// Common back-door identification of P(y|do(x)) assuming a shared ordering.
IdentificationVerdict identify_total_shared_order(const EffectQuery& q);
/// Common back-door identification of P(y|do(x)); the graph may be cyclic.
IdentificationVerdict identify_total_general(const EffectQuery& q);
/// Common single-door identification of the path coefficient, shared ordering.
IdentificationVerdict identify_direct_shared_order(const EffectQuery& q);
/// Common single-door identification of the path coefficient; may be cyclic.
IdentificationVerdict identify_direct_general(const EffectQuery& q);

/// Dispatches on q.shared_order_assumed().
IdentificationVerdict identify(const EffectQuery& q, Quantity quantity);

// Formula rendering shared with the oracle.
std::string null_formula(Quantity q);
std::string adjustment_formula(Quantity q, const DirectedGraph& g, Vertex x, Vertex y,
                               const VertexSet& w);
std::string not_identifiable_formula();

}  // namespace diffgraph
