#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <Eigen/QR>

#include "diffgraph/dataset.hpp"
#include "diffgraph/identify.hpp"

namespace diffgraph {

/// P(y|do(x)) over the observed codes of X and Y. Row i holds the outcome
/// distribution under do(X = exposure_values[i]).
struct InterventionalTable {
  std::vector<int> exposure_values;
  std::vector<int> outcome_values;
  Eigen::MatrixXd probabilities;
};

struct AdjustmentOptions {
  /// Add-alpha smoothing of P(y|x,w). Without it an empty (x, w) cell inside
  /// an observed stratum raises PositivityViolation.
  std::optional<double> laplace;
  /// Override the observed cardinalities, e.g. to align two populations.
  std::optional<int> exposure_cardinality;
  std::optional<int> outcome_cardinality;
};

/// Plug-in estimate of sum_w P(y|x,w) P(w) from empirical frequencies.
InterventionalTable adjustment_total(const Dataset& data, std::string_view x, std::string_view y,
                                     std::span<const std::string> w, const AdjustmentOptions& options = {});

/// Table with every row equal to the empirical marginal P(y).
InterventionalTable null_total(const Dataset& data, std::string_view x, std::string_view y,
                               const AdjustmentOptions& options = {});

/// Relative rank threshold below which the regression design is singular.
inline constexpr double kSingularDesignTolerance = 1e-10;

/// Least-squares coefficient of the first column of `regressors` when the
/// response is regressed on all columns plus an intercept. Solved with a
/// column-pivoting Householder QR, never the normal equations.
template <typename RegressorsDerived, typename ResponseDerived>
typename RegressorsDerived::Scalar partial_regression_coefficient(
    const Eigen::MatrixBase<RegressorsDerived>& regressors, const Eigen::MatrixBase<ResponseDerived>& response) {
  using Scalar = typename RegressorsDerived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = regressors.rows();
  const Eigen::Index k = regressors.cols();
  if (k < 1) throw EstimationError("regression needs the exposure column");
  if (response.rows() != n || response.cols() != 1) throw EstimationError("response must be a column of length n");
  if (n <= k + 1) {
    throw EstimationError("regression needs more rows (" + std::to_string(n) + ") than covariates plus two (" +
                          std::to_string(k + 1) + ")");
  }

  Matrix design(n, k + 1);
  design.col(0).setOnes();
  design.rightCols(k) = regressors;

  Eigen::ColPivHouseholderQR<Matrix> qr(design);
  qr.setThreshold(Scalar(kSingularDesignTolerance));
  if (qr.rank() < design.cols()) {
    throw SingularDesign("design matrix is rank deficient (rank " + std::to_string(qr.rank()) + " of " +
                         std::to_string(design.cols()) + "); covariates are collinear");
  }
  const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> beta = qr.solve(response.derived().template cast<Scalar>());
  return beta(1);
}

/// Coefficient of x when y is regressed on x, w and an intercept.
double partial_regression_coefficient(const Dataset& data, std::string_view x, std::string_view y,
                                      std::span<const std::string> w);

/// Effect estimates in both populations and their difference. Direct
/// effects are 1x1 matrices; total effects are P(y|do(x)) tables whose
/// axes are `exposure_values` x `outcome_values`.
struct CausalChangeReport {
  Quantity quantity = Quantity::Total;
  Eigen::MatrixXd population1;
  Eigen::MatrixXd population2;
  /// population1 - population2, elementwise.
  Eigen::MatrixXd change;
  std::vector<std::string> adjustment_set;
  std::vector<int> exposure_values;
  std::vector<int> outcome_values;
};

/// Applies the verdict's formula, with the same adjustment set, to each
/// population. `graph` supplies the names of the verdict's vertex indices.
CausalChangeReport causal_change(const IdentificationVerdict& verdict, const DirectedGraph& graph,
                                 const Dataset& data1, const Dataset& data2, std::string_view x,
                                 std::string_view y, const AdjustmentOptions& options = {});

}  // namespace diffgraph
