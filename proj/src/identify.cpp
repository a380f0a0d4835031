#include "diffgraph/identify.hpp"

namespace diffgraph {

std::string_view to_string(Quantity q) { return q == Quantity::Total ? "total" : "direct"; }

std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::NullEffect: return "NullEffect";
    case VerdictKind::AdjustmentIdentifiable: return "AdjustmentIdentifiable";
    case VerdictKind::NotIdentifiable: return "NotIdentifiable";
  }
  return "?";
}

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::A1: return "A.1";
    case Condition::A2: return "A.2";
    case Condition::B1: return "B.1";
    case Condition::B2: return "B.2";
    case Condition::C1: return "C.1";
    case Condition::C2: return "C.2";
    case Condition::D1: return "D.1";
    case Condition::D2: return "D.2";
    case Condition::None: return "none";
  }
  return "?";
}

EffectQuery::EffectQuery(DifferenceGraph graph, Vertex exposure, Vertex outcome, bool shared_order_assumed)
    : graph_(std::move(graph)), exposure_(exposure), outcome_(outcome), shared_order_(shared_order_assumed) {
  graph_.check_vertex(exposure_);
  graph_.check_vertex(outcome_);
  if (exposure_ == outcome_) throw OverlapError("exposure and outcome must differ");
  if (shared_order_ && !is_acyclic(graph_)) {
    throw CyclicGraph("shared topological ordering assumed but the difference graph has a cycle");
  }
}

EffectQuery::EffectQuery(DifferenceGraph graph, std::string_view exposure, std::string_view outcome,
                         bool shared_order_assumed)
    : EffectQuery(graph, graph.index_of(exposure), graph.index_of(outcome), shared_order_assumed) {}

std::string null_formula(Quantity q) { return q == Quantity::Total ? "P(y)" : "α = 0"; }

std::string not_identifiable_formula() { return "not identifiable"; }

std::string adjustment_formula(Quantity q, const DirectedGraph& g, Vertex x, Vertex y, const VertexSet& w) {
  std::string list;
  for (Vertex v : w) {
    if (!list.empty()) list += ',';
    list += g.name(v);
  }
  const std::string& xs = g.name(x);
  const std::string& ys = g.name(y);
  if (q == Quantity::Direct) {
    return w.empty() ? "r_{" + ys + "," + xs + "}" : "r_{" + ys + "," + xs + ".{" + list + "}}";
  }
  if (w.empty()) return "P(" + ys + "|" + xs + ")";
  return "Σ_{" + list + "} P(" + ys + "|" + xs + "," + list + ")P(" + list + ")";
}

namespace {

// The four checkers share one skeleton. For total effects the pivot is the
// exposure X, for direct effects it is the outcome Y; the adjustment set is
// the pivot's strict ancestors minus the query pair.
struct Analysis {
  bool y_reaches_x;   // Y in Ancestors(X)
  bool x_reaches_y;   // X in Ancestors(Y)
  bool pivot_totally_ordered;  // every other W is an ancestor or descendant of the pivot
  bool pivot_acyclic;          // Ancestors(pivot) ∩ Descendants(pivot) = {pivot}
  VertexSet adjustment;
};

Analysis analyse(const EffectQuery& q, Quantity quantity) {
  const auto& g = q.graph();
  const Vertex x = q.exposure();
  const Vertex y = q.outcome();
  const Vertex pivot = quantity == Quantity::Total ? x : y;

  const VertexSet anc_x = ancestors(g, x);
  const VertexSet anc_y = ancestors(g, y);
  const VertexSet anc_p = ancestors(g, pivot);
  const VertexSet desc_p = descendants(g, pivot);

  Analysis a;
  a.y_reaches_x = contains(anc_x, y);
  a.x_reaches_y = contains(anc_y, x);
  a.pivot_totally_ordered = true;
  for (Vertex w = 0; w < g.size(); ++w) {
    if (w == x || w == y) continue;
    if (!contains(anc_p, w) && !contains(desc_p, w)) {
      a.pivot_totally_ordered = false;
      break;
    }
  }
  a.pivot_acyclic = set_intersection(anc_p, desc_p) == VertexSet{pivot};
  a.adjustment = quantity == Quantity::Total ? set_difference(anc_x, {x})
                                              : set_difference(anc_y, x < y ? VertexSet{x, y} : VertexSet{y, x});
  return a;
}

IdentificationVerdict null_verdict(Quantity q, Condition c) {
  return {q, VerdictKind::NullEffect, std::nullopt, null_formula(q), c};
}

IdentificationVerdict adjustment_verdict(const EffectQuery& q, Quantity quantity, Condition c, VertexSet w) {
  std::string f = adjustment_formula(quantity, q.graph(), q.exposure(), q.outcome(), w);
  return {quantity, VerdictKind::AdjustmentIdentifiable, std::move(w), std::move(f), c};
}

IdentificationVerdict not_identifiable(Quantity q) {
  return {q, VerdictKind::NotIdentifiable, std::nullopt, not_identifiable_formula(), Condition::None};
}

void require_shared_order(const EffectQuery& q) {
  if (!q.shared_order_assumed()) {
    throw Error("this checker requires the shared-ordering assumption to be set on the query");
  }
}

}  // namespace

IdentificationVerdict identify_total_shared_order(const EffectQuery& q) {
  require_shared_order(q);
  Analysis a = analyse(q, Quantity::Total);
  if (a.y_reaches_x) return null_verdict(Quantity::Total, Condition::A1);
  if (a.x_reaches_y && a.pivot_totally_ordered) {
    return adjustment_verdict(q, Quantity::Total, Condition::A2, std::move(a.adjustment));
  }
  return not_identifiable(Quantity::Total);
}

IdentificationVerdict identify_total_general(const EffectQuery& q) {
  Analysis a = analyse(q, Quantity::Total);
  if (a.y_reaches_x && !a.x_reaches_y) return null_verdict(Quantity::Total, Condition::B1);
  if (a.x_reaches_y && a.pivot_totally_ordered && a.pivot_acyclic) {
    return adjustment_verdict(q, Quantity::Total, Condition::B2, std::move(a.adjustment));
  }
  return not_identifiable(Quantity::Total);
}

IdentificationVerdict identify_direct_shared_order(const EffectQuery& q) {
  require_shared_order(q);
  Analysis a = analyse(q, Quantity::Direct);
  if (a.y_reaches_x) return null_verdict(Quantity::Direct, Condition::C1);
  if (a.x_reaches_y && a.pivot_totally_ordered) {
    return adjustment_verdict(q, Quantity::Direct, Condition::C2, std::move(a.adjustment));
  }
  return not_identifiable(Quantity::Direct);
}

IdentificationVerdict identify_direct_general(const EffectQuery& q) {
  Analysis a = analyse(q, Quantity::Direct);
  if (a.y_reaches_x && !a.x_reaches_y) return null_verdict(Quantity::Direct, Condition::D1);
  if (a.x_reaches_y && a.pivot_totally_ordered && a.pivot_acyclic) {
    return adjustment_verdict(q, Quantity::Direct, Condition::D2, std::move(a.adjustment));
  }
  return not_identifiable(Quantity::Direct);
}

IdentificationVerdict identify(const EffectQuery& q, Quantity quantity) {
  if (quantity == Quantity::Total) {
    return q.shared_order_assumed() ? identify_total_shared_order(q) : identify_total_general(q);
  }
  return q.shared_order_assumed() ? identify_direct_shared_order(q) : identify_direct_general(q);
}

}  // namespace diffgraph
