#include "diffgraph/estimate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace diffgraph {

namespace {

struct StratumCounts {
  long long total = 0;
  std::vector<long long> by_exposure;
  std::vector<long long> by_exposure_outcome;  // row-major [x][y]
};

std::string describe_stratum(std::span<const std::string> w, const std::vector<int>& key) {
  if (w.empty()) return "the whole sample";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out += (i ? ", " : "") + w[i] + "=" + std::to_string(key[i]);
  }
  return "stratum {" + out + "}";
}

void check_query_columns(const Dataset& data, std::string_view x, std::string_view y,
                         std::span<const std::string> w) {
  if (x == y) throw OverlapError("exposure and outcome must differ");
  data.column(x);
  data.column(y);
  std::set<std::string_view> seen;
  for (const auto& v : w) {
    if (v == x || v == y) throw OverlapError("adjustment set contains '" + v + "'");
    if (!seen.insert(v).second) throw OverlapError("adjustment set lists '" + v + "' twice");
    data.column(v);
  }
}

std::vector<int> iota_codes(int n) {
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

}  // namespace

InterventionalTable adjustment_total(const Dataset& data, std::string_view x, std::string_view y,
                                     std::span<const std::string> w, const AdjustmentOptions& options) {
  if (data.kind() != DataKind::Discrete) throw EstimationError("the adjustment formula needs discrete data");
  check_query_columns(data, x, y, w);
  if (data.rows() == 0) throw EstimationError("dataset is empty");
  if (options.laplace && !(*options.laplace > 0)) throw EstimationError("laplace smoothing must be positive");

  const int card_x = options.exposure_cardinality.value_or(data.cardinality(x));
  const int card_y = options.outcome_cardinality.value_or(data.cardinality(y));
  if (card_x < data.cardinality(x) || card_y < data.cardinality(y)) {
    throw EstimationError("cardinality override is smaller than the observed codes");
  }
  const auto& values = data.values();
  const Eigen::Index xc = data.column(x);
  const Eigen::Index yc = data.column(y);
  std::vector<Eigen::Index> wc;
  for (const auto& v : w) wc.push_back(data.column(v));

  std::map<std::vector<int>, StratumCounts> strata;
  std::vector<int> key(wc.size());
  for (Eigen::Index i = 0; i < data.rows(); ++i) {
    for (std::size_t k = 0; k < wc.size(); ++k) key[k] = static_cast<int>(values(i, wc[k]));
    auto& s = strata[key];
    if (s.by_exposure.empty()) {
      s.by_exposure.assign(static_cast<std::size_t>(card_x), 0);
      s.by_exposure_outcome.assign(static_cast<std::size_t>(card_x) * static_cast<std::size_t>(card_y), 0);
    }
    const auto xv = static_cast<std::size_t>(values(i, xc));
    const auto yv = static_cast<std::size_t>(values(i, yc));
    ++s.total;
    ++s.by_exposure[xv];
    ++s.by_exposure_outcome[xv * static_cast<std::size_t>(card_y) + yv];
  }

  const double n = static_cast<double>(data.rows());
  const double alpha = options.laplace.value_or(0.0);
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(card_x, card_y);
  for (const auto& [stratum, counts] : strata) {
    const double p_w = static_cast<double>(counts.total) / n;
    for (int xv = 0; xv < card_x; ++xv) {
      const auto nx = counts.by_exposure[static_cast<std::size_t>(xv)];
      if (nx == 0 && !options.laplace) {
        throw PositivityViolation("no rows with " + std::string(x) + "=" + std::to_string(xv) + " in " +
                                  describe_stratum(w, stratum) + " (positivity violated; try --laplace)");
      }
      const double denom = static_cast<double>(nx) + alpha * card_y;
      for (int yv = 0; yv < card_y; ++yv) {
        const auto nxy = counts.by_exposure_outcome[static_cast<std::size_t>(xv * card_y + yv)];
        p(xv, yv) += p_w * (static_cast<double>(nxy) + alpha) / denom;
      }
    }
  }
  return {iota_codes(card_x), iota_codes(card_y), std::move(p)};
}

InterventionalTable null_total(const Dataset& data, std::string_view x, std::string_view y,
                               const AdjustmentOptions& options) {
  if (data.kind() != DataKind::Discrete) throw EstimationError("the null-effect table needs discrete data");
  check_query_columns(data, x, y, {});
  if (data.rows() == 0) throw EstimationError("dataset is empty");
  const int card_x = options.exposure_cardinality.value_or(data.cardinality(x));
  const int card_y = options.outcome_cardinality.value_or(data.cardinality(y));

  Eigen::RowVectorXd marginal = Eigen::RowVectorXd::Zero(card_y);
  const auto ycol = data.column_values(y);
  for (Eigen::Index i = 0; i < data.rows(); ++i) marginal(static_cast<Eigen::Index>(ycol(i))) += 1.0;
  marginal /= static_cast<double>(data.rows());
  return {iota_codes(card_x), iota_codes(card_y), marginal.replicate(card_x, 1)};
}

double partial_regression_coefficient(const Dataset& data, std::string_view x, std::string_view y,
                                      std::span<const std::string> w) {
  if (data.kind() != DataKind::Continuous) {
    throw EstimationError("the regression coefficient needs continuous data");
  }
  check_query_columns(data, x, y, w);
  Eigen::MatrixXd regressors(data.rows(), static_cast<Eigen::Index>(w.size() + 1));
  regressors.col(0) = data.column_values(x);
  for (std::size_t k = 0; k < w.size(); ++k) {
    regressors.col(static_cast<Eigen::Index>(k + 1)) = data.column_values(w[k]);
  }
  return partial_regression_coefficient(regressors, data.column_values(y));
}

CausalChangeReport causal_change(const IdentificationVerdict& verdict, const DirectedGraph& graph,
                                 const Dataset& data1, const Dataset& data2, std::string_view x,
                                 std::string_view y, const AdjustmentOptions& options) {
  if (!verdict.identifiable()) throw NotIdentifiableInput("causal change requested for a non-identifiable effect");
  if (data1.kind() != data2.kind()) throw EstimationError("populations must have the same data kind");
  {
    std::set<std::string> a, b;
    for (const auto& v : data1.variable_names()) a.insert(v.str());
    for (const auto& v : data2.variable_names()) b.insert(v.str());
    if (a != b) throw EstimationError("populations must share variable names");
  }

  CausalChangeReport report;
  report.quantity = verdict.quantity;
  if (verdict.adjustment_set) report.adjustment_set = graph.names_of(*verdict.adjustment_set);

  if (verdict.quantity == Quantity::Total) {
    AdjustmentOptions aligned = options;
    if (!aligned.exposure_cardinality) {
      aligned.exposure_cardinality = std::max(data1.cardinality(x), data2.cardinality(x));
    }
    if (!aligned.outcome_cardinality) {
      aligned.outcome_cardinality = std::max(data1.cardinality(y), data2.cardinality(y));
    }
    auto estimate = [&](const Dataset& d) {
      return verdict.kind == VerdictKind::NullEffect ? null_total(d, x, y, aligned)
                                                     : adjustment_total(d, x, y, report.adjustment_set, aligned);
    };
    InterventionalTable t1 = estimate(data1);
    InterventionalTable t2 = estimate(data2);
    report.exposure_values = t1.exposure_values;
    report.outcome_values = t1.outcome_values;
    report.population1 = std::move(t1.probabilities);
    report.population2 = std::move(t2.probabilities);
  } else {
    auto estimate = [&](const Dataset& d) {
      if (verdict.kind == VerdictKind::NullEffect) return 0.0;
      return partial_regression_coefficient(d, x, y, report.adjustment_set);
    };
    report.population1 = Eigen::MatrixXd::Constant(1, 1, estimate(data1));
    report.population2 = Eigen::MatrixXd::Constant(1, 1, estimate(data2));
  }
  report.change = report.population1 - report.population2;
  return report;
}

}  // namespace diffgraph
