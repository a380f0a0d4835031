#include "diffgraph/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "diffgraph/oracle.hpp"

namespace diffgraph {

LinearScm::LinearScm(CausalDag dag, std::map<Edge, double> coefficients, std::vector<double> noise_scales,
                     NoiseFamily noise_family)
    : dag_(std::move(dag)),
      coefficients_(std::move(coefficients)),
      noise_scales_(std::move(noise_scales)),
      noise_family_(noise_family) {
  if (coefficients_.size() != dag_.edges().size()) {
    throw Error("linear SCM needs exactly one coefficient per DAG edge");
  }
  for (const Edge& e : dag_.edges()) {
    auto it = coefficients_.find(e);
    if (it == coefficients_.end()) throw Error("missing coefficient for edge " + dag_.name(e.tail) + " -> " +
                                               dag_.name(e.head));
    if (it->second == 0.0 || !std::isfinite(it->second)) throw Error("path coefficients must be finite and nonzero");
  }
  if (noise_scales_.size() != dag_.size()) throw Error("linear SCM needs one noise scale per vertex");
  for (double s : noise_scales_) {
    if (!(s > 0.0) || !std::isfinite(s)) throw Error("noise scales must be strictly positive");
  }
}

double LinearScm::coefficient(Vertex tail, Vertex head) const {
  dag_.check_vertex(tail);
  dag_.check_vertex(head);
  auto it = coefficients_.find(Edge{tail, head});
  return it == coefficients_.end() ? 0.0 : it->second;
}

DifferenceGraph difference_graph_of(const LinearScm& scm1, const LinearScm& scm2) {
  if (!scm1.dag().same_vertices(scm2.dag())) throw VertexSetMismatch("SCMs are over different variables");
  std::vector<Edge> changed;
  const std::size_t n = scm1.dag().size();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && scm1.coefficient(u, v) != scm2.coefficient(u, v)) changed.push_back({u, v});
    }
  }
  return DifferenceGraph(scm1.dag().vertices(), std::move(changed));
}

namespace {

using Rng = std::mt19937_64;

double draw_coefficient(Rng& rng) {
  std::uniform_real_distribution<double> magnitude(kCoefficientFloor, kCoefficientCeiling);
  std::bernoulli_distribution negative(0.5);
  const double m = magnitude(rng);
  return negative(rng) ? -m : m;
}

// Random topological order: Kahn's algorithm choosing uniformly among the
// ready vertices.
std::vector<Vertex> random_topological_order(const DirectedGraph& g, Rng& rng) {
  std::vector<std::size_t> in_degree(g.size());
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < g.size(); ++v) {
    in_degree[v] = g.parents(v).size();
    if (in_degree[v] == 0) ready.push_back(v);
  }
  std::vector<Vertex> order;
  while (!ready.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
    const std::size_t i = pick(rng);
    const Vertex v = ready[i];
    ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(i));
    order.push_back(v);
    for (Vertex c : g.children(v)) {
      if (--in_degree[c] == 0) ready.push_back(c);
    }
  }
  if (order.size() != g.size()) throw CyclicGraph("graph has a cycle; no topological order exists");
  return order;
}

std::vector<std::size_t> positions(const std::vector<Vertex>& order) {
  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  return pos;
}

CompatiblePair randomized_pair(const DifferenceGraph& d, bool shared_order, Rng& rng) {
  std::vector<Vertex> order1;
  std::vector<Vertex> order2;
  if (shared_order) {
    order1 = random_topological_order(d, rng);
    order2 = order1;
  } else {
    order1.resize(d.size());
    std::iota(order1.begin(), order1.end(), Vertex{0});
    std::shuffle(order1.begin(), order1.end(), rng);
    // Changed edges pointing backwards in the first order must point forwards
    // in the second; they form a DAG because reversing order1 sorts them.
    const auto pos = positions(order1);
    std::vector<Edge> backward;
    for (const Edge& e : d.edges()) {
      if (pos[e.tail] > pos[e.head]) backward.push_back(e);
    }
    order2 = random_topological_order(DirectedGraph(d.vertices(), std::move(backward)), rng);
  }
  const auto pos1 = positions(order1);
  const auto pos2 = positions(order2);

  std::bernoulli_distribution coin(0.5);
  std::vector<Edge> e1;
  std::vector<Edge> e2;
  for (Vertex u = 0; u < d.size(); ++u) {
    for (Vertex v = 0; v < d.size(); ++v) {
      if (u == v) continue;
      const bool fwd1 = pos1[u] < pos1[v];
      const bool fwd2 = pos2[u] < pos2[v];
      if (d.has_edge(u, v)) {
        // Options: only in g1, only in g2, in both.
        std::vector<int> options;
        if (fwd1) options.push_back(1);
        if (fwd2) options.push_back(2);
        if (fwd1 && fwd2) options.push_back(3);
        std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
        const int choice = options[pick(rng)];
        if (choice & 1) e1.push_back({u, v});
        if (choice & 2) e2.push_back({u, v});
      } else if (fwd1 && fwd2 && coin(rng)) {
        e1.push_back({u, v});
        e2.push_back({u, v});
      }
    }
  }
  return {CausalDag(d.vertices(), std::move(e1)), CausalDag(d.vertices(), std::move(e2))};
}

bool use_exhaustive(const DifferenceGraph& d, PairStrategy strategy) {
  switch (strategy) {
    case PairStrategy::Exhaustive:
      if (d.size() > kOracleVertexCap) {
        throw TooManyVertices("exhaustive pair sampling supports at most " + std::to_string(kOracleVertexCap) +
                              " vertices");
      }
      return true;
    case PairStrategy::Randomized: return false;
    case PairStrategy::Automatic: return d.size() <= kOracleVertexCap;
  }
  return false;
}

}  // namespace

ScmPair sample_compatible_pair(const DifferenceGraph& d, bool shared_order, std::uint64_t seed,
                               const PairSamplingOptions& options) {
  if (shared_order && !is_acyclic(d)) {
    throw CyclicGraph("shared topological ordering requested for a cyclic difference graph");
  }
  Rng rng(seed);
  CompatiblePair dags = [&] {
    if (!use_exhaustive(d, options.strategy)) return randomized_pair(d, shared_order, rng);
    const std::size_t count = count_compatible_pairs(d, shared_order);
    if (count == 0) throw Error("no compatible pair of causal DAGs exists");
    std::uniform_int_distribution<std::size_t> pick(0, count - 1);
    return nth_compatible_pair(d, shared_order, pick(rng));
  }();

  std::map<Edge, double> c1;
  std::map<Edge, double> c2;
  for (Vertex u = 0; u < d.size(); ++u) {
    for (Vertex v = 0; v < d.size(); ++v) {
      if (u == v) continue;
      const Edge e{u, v};
      const bool in1 = dags.g1.has_edge(u, v);
      const bool in2 = dags.g2.has_edge(u, v);
      if (!in1 && !in2) continue;
      if (!d.has_edge(u, v)) {
        const double shared = draw_coefficient(rng);
        c1[e] = shared;
        c2[e] = shared;
      } else if (in1 && in2) {
        const double a1 = draw_coefficient(rng);
        double a2 = draw_coefficient(rng);
        while (std::abs(a1 - a2) < kCoefficientFloor) a2 = draw_coefficient(rng);
        c1[e] = a1;
        c2[e] = a2;
      } else {
        (in1 ? c1 : c2)[e] = draw_coefficient(rng);
      }
    }
  }
  std::vector<double> unit(d.size(), 1.0);
  return {LinearScm(std::move(dags.g1), std::move(c1), unit, options.noise_family),
          LinearScm(std::move(dags.g2), std::move(c2), unit, options.noise_family), d};
}

Dataset sample_dataset(const LinearScm& scm, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error("sample size must be positive");
  const auto& dag = scm.dag();
  const auto rows = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd values(rows, static_cast<Eigen::Index>(dag.size()));
  Rng rng(seed);
  std::normal_distribution<double> gaussian(0.0, 1.0);
  const double half_width = std::sqrt(3.0);
  std::uniform_real_distribution<double> uniform(-half_width, half_width);

  for (Vertex v : dag.topological_order()) {
    auto col = values.col(static_cast<Eigen::Index>(v));
    const double scale = scm.noise_scales()[v];
    for (Eigen::Index i = 0; i < rows; ++i) {
      col(i) = scale * (scm.noise_family() == NoiseFamily::Gaussian ? gaussian(rng) : uniform(rng));
    }
    for (Vertex p : dag.parents(v)) {
      col += scm.coefficient(p, v) * values.col(static_cast<Eigen::Index>(p));
    }
  }
  return Dataset(dag.vertices(), std::move(values), DataKind::Continuous);
}

double ground_truth_direct(const LinearScm& scm, Vertex x, Vertex y) { return scm.coefficient(x, y); }

double ground_truth_total_linear(const LinearScm& scm, Vertex x, Vertex y) {
  const auto& dag = scm.dag();
  dag.check_vertex(x);
  dag.check_vertex(y);
  if (x == y) throw OverlapError("total effect needs two distinct vertices");
  // paths[v] = sum over directed paths x -> ... -> v of coefficient products.
  std::vector<double> paths(dag.size(), 0.0);
  paths[x] = 1.0;
  for (Vertex v : dag.topological_order()) {
    if (v == x) continue;
    for (Vertex p : dag.parents(v)) paths[v] += scm.coefficient(p, v) * paths[p];
  }
  return paths[y];
}

DiscreteNetwork::DiscreteNetwork(CausalDag dag, std::vector<int> cardinalities, std::vector<Eigen::MatrixXd> cpts)
    : dag_(std::move(dag)), cardinalities_(std::move(cardinalities)), cpts_(std::move(cpts)) {
  if (cardinalities_.size() != dag_.size() || cpts_.size() != dag_.size()) {
    throw Error("discrete network needs one cardinality and one CPT per vertex");
  }
  for (Vertex v = 0; v < dag_.size(); ++v) {
    if (cardinalities_[v] < 1) throw Error("cardinalities must be positive");
    Eigen::Index configs = 1;
    for (Vertex p : dag_.parents(v)) configs *= cardinalities_[p];
    const auto& t = cpts_[v];
    if (t.rows() != configs || t.cols() != cardinalities_[v]) {
      throw Error("CPT of '" + dag_.name(v) + "' has the wrong shape");
    }
    if ((t.array() < 0).any() || ((t.rowwise().sum().array() - 1.0).abs() > 1e-9).any()) {
      throw Error("CPT rows of '" + dag_.name(v) + "' must be distributions");
    }
  }
}

Eigen::Index DiscreteNetwork::parent_configuration(Vertex v, const std::vector<int>& assignment) const {
  Eigen::Index row = 0;
  for (Vertex p : dag_.parents(v)) row = row * cardinalities_[p] + assignment[p];
  return row;
}

Dataset DiscreteNetwork::sample(std::size_t n, std::uint64_t seed) const {
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::MatrixXd values(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(dag_.size()));
  std::vector<int> assignment(dag_.size(), 0);
  const auto order = dag_.topological_order();
  for (std::size_t i = 0; i < n; ++i) {
    for (Vertex v : order) {
      const auto row = cpts_[v].row(parent_configuration(v, assignment));
      const double u = unit(rng);
      double cumulative = 0.0;
      int state = cardinalities_[v] - 1;
      for (int s = 0; s < cardinalities_[v]; ++s) {
        cumulative += row(s);
        if (u < cumulative) {
          state = s;
          break;
        }
      }
      assignment[v] = state;
      values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(v)) = state;
    }
  }
  return Dataset(dag_.vertices(), std::move(values), DataKind::Discrete);
}

}  // namespace diffgraph
