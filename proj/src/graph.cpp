#include "diffgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <set>

namespace diffgraph {

VariableId::VariableId(std::string name) : name_(std::move(name)) {
  if (!is_valid(name_)) {
    throw InvalidName("invalid variable name '" + name_ + "'");
  }
}

bool VariableId::is_valid(std::string_view name) noexcept {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  });
}

DirectedGraph::DirectedGraph(std::vector<VariableId> vertices, std::vector<Edge> edges)
    : names_(std::move(vertices)), edges_(std::move(edges)) {
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n.str()).second) {
      throw InvalidGraph("duplicate vertex '" + n.str() + "'");
    }
  }
  for (const Edge& e : edges_) {
    if (e.tail >= names_.size() || e.head >= names_.size()) {
      throw UnknownVertex("edge endpoint out of range");
    }
    if (e.tail == e.head) {
      throw InvalidGraph("self-loop on '" + names_[e.tail].str() + "'");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  parents_.resize(names_.size());
  children_.resize(names_.size());
  for (const Edge& e : edges_) {
    children_[e.tail].push_back(e.head);
    parents_[e.head].push_back(e.tail);
  }
  for (auto& p : parents_) std::sort(p.begin(), p.end());
}

const std::string& DirectedGraph::name(Vertex v) const {
  check_vertex(v);
  return names_[v].str();
}

std::optional<Vertex> DirectedGraph::find(std::string_view name) const {
  for (Vertex v = 0; v < names_.size(); ++v) {
    if (names_[v].str() == name) return v;
  }
  return std::nullopt;
}

Vertex DirectedGraph::index_of(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw UnknownVertex("unknown vertex '" + std::string(name) + "'");
}

bool DirectedGraph::has_edge(Vertex tail, Vertex head) const {
  check_vertex(tail);
  check_vertex(head);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{tail, head});
}

std::span<const Vertex> DirectedGraph::parents(Vertex v) const {
  check_vertex(v);
  return parents_[v];
}

std::span<const Vertex> DirectedGraph::children(Vertex v) const {
  check_vertex(v);
  return children_[v];
}

void DirectedGraph::check_vertex(Vertex v) const {
  if (v >= names_.size()) {
    throw UnknownVertex("vertex index " + std::to_string(v) + " out of range");
  }
}

std::vector<std::string> DirectedGraph::names_of(std::span<const Vertex> set) const {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (Vertex v : set) out.push_back(name(v));
  return out;
}

CausalDag::CausalDag(std::vector<VariableId> vertices, std::vector<Edge> edges)
    : CausalDag(DirectedGraph(std::move(vertices), std::move(edges))) {}

CausalDag::CausalDag(DirectedGraph g) : DirectedGraph(std::move(g)) {
  auto order = diffgraph::topological_order(*this);
  if (!order) throw CyclicGraph("causal DAG contains a directed cycle");
  order_ = std::move(*order);
}

CausalDag CausalDag::without_edge(Edge e) const {
  std::vector<Edge> kept;
  kept.reserve(edges().size());
  for (const Edge& f : edges()) {
    if (f != e) kept.push_back(f);
  }
  return CausalDag(vertices(), std::move(kept));
}

namespace {

template <typename Next>
VertexSet closure(const DirectedGraph& g, Vertex v, Next next) {
  g.check_vertex(v);
  std::vector<char> mark(g.size(), 0);
  std::vector<Vertex> stack{v};
  mark[v] = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : next(u)) {
      if (!mark[w]) {
        mark[w] = 1;
        stack.push_back(w);
      }
    }
  }
  VertexSet out;
  for (Vertex u = 0; u < g.size(); ++u) {
    if (mark[u]) out.push_back(u);
  }
  return out;
}

}  // namespace

VertexSet ancestors(const DirectedGraph& g, Vertex v) {
  return closure(g, v, [&g](Vertex u) { return g.parents(u); });
}

VertexSet descendants(const DirectedGraph& g, Vertex v) {
  return closure(g, v, [&g](Vertex u) { return g.children(u); });
}

bool is_ancestor(const DirectedGraph& g, Vertex candidate, Vertex of) {
  g.check_vertex(candidate);
  return contains(ancestors(g, of), candidate);
}

std::optional<std::vector<Vertex>> topological_order(const DirectedGraph& g) {
  std::vector<std::size_t> in_degree(g.size());
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < g.size(); ++v) {
    in_degree[v] = g.parents(v).size();
    if (in_degree[v] == 0) ready.push(v);
  }
  std::vector<Vertex> order;
  order.reserve(g.size());
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (Vertex c : g.children(v)) {
      if (--in_degree[c] == 0) ready.push(c);
    }
  }
  if (order.size() != g.size()) return std::nullopt;
  return order;
}

bool is_acyclic(const DirectedGraph& g) { return topological_order(g).has_value(); }

bool shares_topological_order(const CausalDag& g1, const CausalDag& g2) {
  if (!g1.same_vertices(g2)) {
    throw VertexSetMismatch("DAGs are defined over different vertex sets");
  }
  std::vector<Edge> all = g1.edges();
  all.insert(all.end(), g2.edges().begin(), g2.edges().end());
  return is_acyclic(DirectedGraph(g1.vertices(), std::move(all)));
}

bool d_separated(const CausalDag& g, Vertex x, Vertex y, std::span<const Vertex> w) {
  g.check_vertex(x);
  g.check_vertex(y);
  if (x == y) throw OverlapError("d-separation query needs two distinct vertices");
  const std::size_t n = g.size();
  std::vector<char> observed(n, 0);
  for (Vertex v : w) {
    g.check_vertex(v);
    observed[v] = 1;
  }
  if (observed[x] || observed[y]) {
    throw OverlapError("query vertex is part of the conditioning set");
  }

  // Vertices that are in w or have a descendant in w; a collider is open
  // exactly when it belongs to this set.
  std::vector<char> opens_collider(n, 0);
  std::vector<Vertex> stack(w.begin(), w.end());
  for (Vertex v : w) opens_collider[v] = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex p : g.parents(u)) {
      if (!opens_collider[p]) {
        opens_collider[p] = 1;
        stack.push_back(p);
      }
    }
  }

  // Traverse (vertex, direction) states. `up` means the trail arrived from a
  // child, `down` means it arrived from a parent.
  enum : int { up = 0, down = 1 };
  std::vector<char> visited(2 * n, 0);
  std::deque<std::pair<Vertex, int>> queue{{x, up}};
  while (!queue.empty()) {
    auto [v, dir] = queue.front();
    queue.pop_front();
    if (visited[2 * v + dir]) continue;
    visited[2 * v + dir] = 1;
    if (v == y) return false;

    if (dir == up && !observed[v]) {
      for (Vertex p : g.parents(v)) queue.emplace_back(p, up);
      for (Vertex c : g.children(v)) queue.emplace_back(c, down);
    } else if (dir == down) {
      if (!observed[v]) {
        for (Vertex c : g.children(v)) queue.emplace_back(c, down);
      }
      if (opens_collider[v]) {
        for (Vertex p : g.parents(v)) queue.emplace_back(p, up);
      }
    }
  }
  return true;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

}  // namespace diffgraph
