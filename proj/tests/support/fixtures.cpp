#include "fixtures.hpp"

#include "diffgraph/edge_list.hpp"

namespace diffgraph::testing {

namespace {

Eigen::MatrixXd rows(std::initializer_list<std::initializer_list<double>> values) {
  const auto r = static_cast<Eigen::Index>(values.size());
  const auto c = static_cast<Eigen::Index>(values.begin()->size());
  Eigen::MatrixXd m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : values) {
    Eigen::Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

CausalDag dag(std::string_view text) { return CausalDag(parse_edge_list(text)); }

}  // namespace

DiscreteNetwork chain_network() {
  // Vertex order W, X, Y.
  return DiscreteNetwork(dag("W -> X\nX -> Y\n"), {2, 2, 2},
                         {rows({{0.3, 0.7}}), rows({{0.8, 0.2}, {0.25, 0.75}}), rows({{0.9, 0.1}, {0.35, 0.65}})});
}

DiscreteNetwork confounded_network() {
  // Vertex order X, Y, W1. Y's parents in index order: X, W1.
  return DiscreteNetwork(dag("node X\nnode Y\nW1 -> X\nW1 -> Y\nX -> Y\n"), {2, 2, 2},
                         {
                             rows({{0.75, 0.25}, {0.2, 0.8}}),                        // X | W1
                             rows({{0.9, 0.1}, {0.55, 0.45}, {0.6, 0.4}, {0.15, 0.85}}),  // Y | X, W1
                             rows({{0.4, 0.6}}),                                        // W1
                         });
}

DiscreteNetwork mediated_network() {
  // Vertex order X, Y, W1, W2. Y's parents in index order: X, W1, W2.
  const auto g = dag("node X\nnode Y\nnode W1\nnode W2\nW1 -> X\nX -> W2\nW1 -> Y\nW2 -> Y\nX -> Y\n");
  Eigen::MatrixXd y(12, 3);
  for (int config = 0; config < 12; ++config) {
    const double lift = 0.04 * config;
    y.row(config) << 0.6 - lift, 0.25, 0.15 + lift;
  }
  return DiscreteNetwork(g, {2, 3, 3, 2},
                         {
                             rows({{0.7, 0.3}, {0.45, 0.55}, {0.2, 0.8}}),  // X | W1
                             y,                                             // Y | X, W1, W2
                             rows({{0.3, 0.5, 0.2}}),                       // W1
                             rows({{0.65, 0.35}, {0.3, 0.7}}),              // W2 | X
                         });
}

DiscreteNetwork reverse_network() {
  return DiscreteNetwork(dag("node X\nY -> X\n"), {2, 3},
                         {rows({{0.7, 0.3}, {0.4, 0.6}, {0.1, 0.9}}), rows({{0.2, 0.5, 0.3}})});
}

}  // namespace diffgraph::testing
