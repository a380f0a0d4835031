#include "diffgraph/serialize.hpp"

#include "diffgraph/edge_list.hpp"

namespace diffgraph {

namespace {

Json matrix_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json to_json(const IdentificationVerdict& verdict, const DirectedGraph& graph) {
  Json j;
  j["kind"] = to_string(verdict.kind);
  j["condition"] = to_string(verdict.condition);
  j["adjustment_set"] = verdict.adjustment_set ? Json(graph.names_of(*verdict.adjustment_set)) : Json(nullptr);
  j["formula"] = verdict.formula;
  return j;
}

Json to_json(const OracleVerdict& verdict, const DirectedGraph& graph) {
  Json j = to_json(verdict.verdict, graph);
  if (verdict.verdict.kind == VerdictKind::NotIdentifiable) {
    Json w = Json::array();
    for (const auto& dag : verdict.witness) w.push_back(to_edge_list(dag));
    j["witness"] = std::move(w);
  }
  return j;
}

Json to_json(const InterventionalTable& table) {
  Json j;
  j["exposure_values"] = table.exposure_values;
  j["outcome_values"] = table.outcome_values;
  j["probabilities"] = matrix_json(table.probabilities);
  return j;
}

Json to_json(const CausalChangeReport& report) {
  Json j;
  j["quantity"] = to_string(report.quantity);
  j["adjustment_set"] = report.adjustment_set;
  if (report.quantity == Quantity::Direct) {
    j["population1"] = report.population1(0, 0);
    j["population2"] = report.population2(0, 0);
    j["change"] = report.change(0, 0);
  } else {
    j["exposure_values"] = report.exposure_values;
    j["outcome_values"] = report.outcome_values;
    j["population1"] = matrix_json(report.population1);
    j["population2"] = matrix_json(report.population2);
    j["change"] = matrix_json(report.change);
  }
  return j;
}

Json to_json(const LinearScm& scm) {
  const auto& dag = scm.dag();
  Json j;
  j["graph"] = to_edge_list(dag);
  Json edges = Json::array();
  for (const auto& [e, alpha] : scm.coefficients()) {
    edges.push_back({{"tail", dag.name(e.tail)}, {"head", dag.name(e.head)}, {"coefficient", alpha}});
  }
  j["coefficients"] = std::move(edges);
  Json scales = Json::object();
  for (Vertex v = 0; v < dag.size(); ++v) scales[dag.name(v)] = scm.noise_scales()[v];
  j["noise_scales"] = std::move(scales);
  j["noise_family"] = scm.noise_family() == NoiseFamily::Gaussian ? "gaussian" : "uniform";
  return j;
}

Json to_json(const SimulationManifest& manifest) {
  if (manifest.pair == nullptr) throw Error("manifest needs an SCM pair");
  Json j;
  j["seed"] = manifest.seed;
  j["rows"] = manifest.rows;
  j["shared_order"] = manifest.shared_order;
  j["difference_graph"] = to_edge_list(manifest.pair->difference_graph);
  j["scm1"] = to_json(manifest.pair->scm1);
  j["scm2"] = to_json(manifest.pair->scm2);
  return j;
}

}  // namespace diffgraph
