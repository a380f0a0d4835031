#include "diffgraph/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace diffgraph {

namespace {

using Mask = std::uint32_t;

// Ordered vertex pairs (u, v), u != v, packed into the bits of a Mask.
struct PairIndex {
  std::size_t n;

  std::size_t count() const { return n * (n - 1); }
  std::size_t bit(Vertex u, Vertex v) const { return u * (n - 1) + (v < u ? v : v - 1); }
  Edge edge(std::size_t b) const {
    Vertex u = b / (n - 1);
    Vertex v = b % (n - 1);
    return {u, v < u ? v : v + 1};
  }
};

bool mask_is_acyclic(Mask m, const PairIndex& idx) {
  std::array<std::uint8_t, kOracleVertexCap> in{};
  for (std::size_t b = 0; b < idx.count(); ++b) {
    if (m >> b & 1u) {
      Edge e = idx.edge(b);
      in[e.head] |= static_cast<std::uint8_t>(1u << e.tail);
    }
  }
  unsigned remaining = (1u << idx.n) - 1;
  while (remaining) {
    bool removed = false;
    for (std::size_t v = 0; v < idx.n; ++v) {
      if ((remaining >> v & 1u) && (in[v] & remaining) == 0) {
        remaining &= ~(1u << v);
        removed = true;
      }
    }
    if (!removed) return false;
  }
  return true;
}

// All labelled DAGs on n vertices, as edge masks in increasing order.
struct DagTable {
  PairIndex idx;
  std::vector<char> is_dag;
  std::vector<Mask> dags;
};

const DagTable& dag_table(std::size_t n) {
  static std::array<std::once_flag, kOracleVertexCap + 1> once;
  static std::array<std::unique_ptr<DagTable>, kOracleVertexCap + 1> tables;
  std::call_once(once[n], [n] {
    auto t = std::make_unique<DagTable>();
    t->idx = PairIndex{n};
    const std::size_t total = std::size_t{1} << t->idx.count();
    t->is_dag.assign(total, 0);
    for (std::size_t m = 0; m < total; ++m) {
      if (n < 2 || mask_is_acyclic(static_cast<Mask>(m), t->idx)) {
        t->is_dag[m] = 1;
        t->dags.push_back(static_cast<Mask>(m));
      }
    }
    tables[n] = std::move(t);
  });
  return *tables[n];
}

void check_cap(const DirectedGraph& d) {
  if (d.size() > kOracleVertexCap) {
    throw TooManyVertices("exhaustive enumeration supports at most " + std::to_string(kOracleVertexCap) +
                          " vertices, graph has " + std::to_string(d.size()));
  }
}

Mask to_mask(const DirectedGraph& g, const PairIndex& idx) {
  Mask m = 0;
  for (const Edge& e : g.edges()) m |= Mask{1} << idx.bit(e.tail, e.head);
  return m;
}

CausalDag to_dag(Mask m, const DirectedGraph& d, const PairIndex& idx) {
  std::vector<Edge> edges;
  for (std::size_t b = 0; b < idx.count(); ++b) {
    if (m >> b & 1u) edges.push_back(idx.edge(b));
  }
  return CausalDag(d.vertices(), std::move(edges));
}

// Visits (g1, g2) mask pairs. The visitor returns false to stop scanning
// partners of the current g1.
template <typename Visit>
void scan_pairs(const DifferenceGraph& d, bool shared_order, Visit visit) {
  check_cap(d);
  const DagTable& t = dag_table(d.size());
  const Mask dmask = to_mask(d, t.idx);
  for (Mask g1 : t.dags) {
    const Mask required = dmask & ~g1;  // changed edges absent from g1 must be in g2
    const Mask free = dmask & g1;       // changed edges in g1 may or may not be in g2
    const Mask base = g1 & ~dmask;      // unchanged edges are shared
    // g1 | g2 == g1 | required for every choice of the free bits.
    if (shared_order && !t.is_dag[g1 | required]) continue;
    Mask s = 0;
    do {
      const Mask g2 = base | required | s;
      if (t.is_dag[g2] && !visit(g1, g2)) break;
      s = (s - free) & free;
    } while (s != 0);
  }
}

// Candidate adjustment sets over V \ {x, y}: by increasing size, then
// lexicographically by vertex order.
std::vector<VertexSet> candidate_sets(std::size_t n, Vertex x, Vertex y) {
  VertexSet others;
  for (Vertex v = 0; v < n; ++v) {
    if (v != x && v != y) others.push_back(v);
  }
  std::vector<VertexSet> out;
  for (std::size_t k = 0; k <= others.size(); ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      VertexSet s;
      for (std::size_t i : pick) s.push_back(others[i]);
      out.push_back(std::move(s));
      // advance to next k-combination
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == others.size() - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

std::vector<CausalDag> pick_witness(std::span<const CausalDag> dags, const std::vector<Mask>& families,
                                    Mask all) {
  for (std::size_t i = 0; i < families.size(); ++i) {
    if (families[i] == 0) return {dags[i]};
  }
  // Pair search over distinct families, each represented by its first DAG.
  std::map<Mask, std::size_t> first_with;
  for (std::size_t i = 0; i < families.size(); ++i) first_with.emplace(families[i], i);
  std::vector<std::size_t> reps;
  for (const auto& [f, i] : first_with) reps.push_back(i);
  std::sort(reps.begin(), reps.end());
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = a + 1; b < reps.size(); ++b) {
      if ((families[reps[a]] & families[reps[b]]) == 0) return {dags[reps[a]], dags[reps[b]]};
    }
  }
  // No conflicting pair; accumulate DAGs until the intersection is empty.
  std::vector<CausalDag> out;
  Mask acc = all;
  for (std::size_t i : reps) {
    if ((acc & families[i]) != acc) {
      acc &= families[i];
      out.push_back(dags[i]);
      if (acc == 0) break;
    }
  }
  return out;
}

}  // namespace

bool is_compatible_pair(const DifferenceGraph& d, const CausalDag& g1, const CausalDag& g2, bool shared_order) {
  if (!d.same_vertices(g1) || !d.same_vertices(g2)) {
    throw VertexSetMismatch("compatible pair must share the difference graph's vertices");
  }
  for (Vertex u = 0; u < d.size(); ++u) {
    for (Vertex v = 0; v < d.size(); ++v) {
      if (u == v) continue;
      const bool in1 = g1.has_edge(u, v);
      const bool in2 = g2.has_edge(u, v);
      if (d.has_edge(u, v) ? !(in1 || in2) : in1 != in2) return false;
    }
  }
  return !shared_order || shares_topological_order(g1, g2);
}

std::vector<CausalDag> enumerate_compatible_dags(const DifferenceGraph& d, bool shared_order) {
  check_cap(d);
  const DagTable& t = dag_table(d.size());
  std::vector<char> member(t.is_dag.size(), 0);
  // Compatibility is symmetric, so a DAG belongs to the set iff it has at
  // least one partner when scanned as g1.
  scan_pairs(d, shared_order, [&](Mask g1, Mask) {
    member[g1] = 1;
    return false;
  });
  std::vector<CausalDag> out;
  for (Mask m : t.dags) {
    if (member[m]) out.push_back(to_dag(m, d, t.idx));
  }
  return out;
}

void for_each_compatible_pair(const DifferenceGraph& d, bool shared_order,
                              const std::function<void(const CausalDag&, const CausalDag&)>& visit) {
  const PairIndex idx{d.size()};
  scan_pairs(d, shared_order, [&](Mask g1, Mask g2) {
    visit(to_dag(g1, d, idx), to_dag(g2, d, idx));
    return true;
  });
}

std::size_t count_compatible_pairs(const DifferenceGraph& d, bool shared_order) {
  std::size_t count = 0;
  scan_pairs(d, shared_order, [&](Mask, Mask) {
    ++count;
    return true;
  });
  return count;
}

CompatiblePair nth_compatible_pair(const DifferenceGraph& d, bool shared_order, std::size_t index) {
  std::size_t seen = 0;
  std::optional<std::pair<Mask, Mask>> found;
  scan_pairs(d, shared_order, [&](Mask g1, Mask g2) {
    if (found) return false;
    if (seen++ == index) found.emplace(g1, g2);
    return true;
  });
  if (!found) throw Error("compatible pair index out of range");
  const PairIndex idx{d.size()};
  return {to_dag(found->first, d, idx), to_dag(found->second, d, idx)};
}

bool satisfies_back_door(const CausalDag& g, Vertex x, Vertex y, std::span<const Vertex> w) {
  const VertexSet desc_x = descendants(g, x);
  for (Vertex v : w) {
    if (v == x || v == y) throw OverlapError("adjustment set contains a query vertex");
    if (contains(desc_x, v)) return false;
  }
  // Paths entering x through a parent are exactly the paths that survive
  // deleting x's outgoing edges.
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (e.tail != x) kept.push_back(e);
  }
  return d_separated(CausalDag(g.vertices(), std::move(kept)), x, y, w);
}

bool satisfies_single_door(const CausalDag& g, Vertex x, Vertex y, std::span<const Vertex> w) {
  const VertexSet desc_y = descendants(g, y);
  for (Vertex v : w) {
    if (v == x || v == y) throw OverlapError("adjustment set contains a query vertex");
    if (contains(desc_y, v)) return false;
  }
  return d_separated(g.without_edge({x, y}), x, y, w);
}

OracleVerdict oracle(const DifferenceGraph& d, std::span<const CausalDag> compatible, Vertex x, Vertex y,
                     Quantity quantity) {
  d.check_vertex(x);
  d.check_vertex(y);
  if (x == y) throw OverlapError("exposure and outcome must differ");
  if (compatible.empty()) throw Error("no pair of causal DAGs is compatible with the difference graph");

  const bool null_everywhere = std::all_of(compatible.begin(), compatible.end(), [&](const CausalDag& g) {
    return quantity == Quantity::Total ? !is_ancestor(g, x, y) : !g.has_edge(x, y);
  });
  if (null_everywhere) {
    return {{quantity, VerdictKind::NullEffect, std::nullopt, null_formula(quantity), Condition::None}, {}};
  }

  const auto candidates = candidate_sets(d.size(), x, y);
  const Mask all = candidates.size() >= 32 ? ~Mask{0} : (Mask{1} << candidates.size()) - 1;
  std::vector<Mask> families;
  families.reserve(compatible.size());
  Mask common = all;
  for (const CausalDag& g : compatible) {
    Mask f = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const bool ok = quantity == Quantity::Total ? satisfies_back_door(g, x, y, candidates[i])
                                                  : satisfies_single_door(g, x, y, candidates[i]);
      if (ok) f |= Mask{1} << i;
    }
    families.push_back(f);
    common &= f;
  }

  if (common != 0) {
    VertexSet w = candidates[static_cast<std::size_t>(std::countr_zero(common))];
    std::string formula = adjustment_formula(quantity, d, x, y, w);
    return {{quantity, VerdictKind::AdjustmentIdentifiable, std::move(w), std::move(formula), Condition::None},
            {}};
  }
  return {{quantity, VerdictKind::NotIdentifiable, std::nullopt, not_identifiable_formula(), Condition::None},
          pick_witness(compatible, families, all)};
}

OracleVerdict oracle(const DifferenceGraph& d, Vertex x, Vertex y, bool shared_order, Quantity quantity) {
  d.check_vertex(x);
  d.check_vertex(y);
  const auto dags = enumerate_compatible_dags(d, shared_order);
  return oracle(d, dags, x, y, quantity);
}

OracleVerdict oracle_total(const DifferenceGraph& d, Vertex x, Vertex y, bool shared_order) {
  return oracle(d, x, y, shared_order, Quantity::Total);
}

OracleVerdict oracle_direct(const DifferenceGraph& d, Vertex x, Vertex y, bool shared_order) {
  return oracle(d, x, y, shared_order, Quantity::Direct);
}

}  // namespace diffgraph
