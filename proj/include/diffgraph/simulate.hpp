#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Core>

#include "diffgraph/dataset.hpp"
#include "diffgraph/graph.hpp"

namespace diffgraph {

enum class NoiseFamily { Gaussian, Uniform };

/// Linear SCM: each vertex is the coefficient-weighted sum of its parents
/// plus independent noise scaled by noise_scales[v]. Noise draws have unit
/// variance in both families.
class LinearScm {
 public:
  LinearScm(CausalDag dag, std::map<Edge, double> coefficients, std::vector<double> noise_scales,
            NoiseFamily noise_family = NoiseFamily::Gaussian);

  const CausalDag& dag() const noexcept { return dag_; }
  const std::map<Edge, double>& coefficients() const noexcept { return coefficients_; }
  const std::vector<double>& noise_scales() const noexcept { return noise_scales_; }
  NoiseFamily noise_family() const noexcept { return noise_family_; }

  /// Path coefficient of tail -> head, 0 when the edge is absent.
  double coefficient(Vertex tail, Vertex head) const;

 private:
  CausalDag dag_;
  std::map<Edge, double> coefficients_;
  std::vector<double> noise_scales_;
  NoiseFamily noise_family_;
};

struct ScmPair {
  LinearScm scm1;
  LinearScm scm2;
  DifferenceGraph difference_graph;
};

/// Edges whose path coefficients differ between the two models.
DifferenceGraph difference_graph_of(const LinearScm& scm1, const LinearScm& scm2);

enum class PairStrategy {
  Automatic,   ///< exhaustive up to the oracle cap, randomized above it
  Exhaustive,  ///< uniform over all compatible pairs; throws above the cap
  Randomized,  ///< random topological orders; any size
};

struct PairSamplingOptions {
  PairStrategy strategy = PairStrategy::Automatic;
  NoiseFamily noise_family = NoiseFamily::Gaussian;
};

/// Smallest |coefficient| and smallest |alpha1 - alpha2| on a changed edge.
inline constexpr double kCoefficientFloor = 0.2;
inline constexpr double kCoefficientCeiling = 1.0;

/// Draws a pair of linear SCMs whose difference graph is exactly `d`.
/// Deterministic given the seed.
ScmPair sample_compatible_pair(const DifferenceGraph& d, bool shared_order, std::uint64_t seed,
                               const PairSamplingOptions& options = {});

/// Ancestral sampling of n rows. Deterministic given the seed.
Dataset sample_dataset(const LinearScm& scm, std::size_t n, std::uint64_t seed);

double ground_truth_direct(const LinearScm& scm, Vertex x, Vertex y);

/// Sum over directed paths x -> ... -> y of the product of coefficients.
double ground_truth_total_linear(const LinearScm& scm, Vertex x, Vertex y);

/// Discrete Bayesian network given by conditional probability tables.
/// cpts[v] has one row per joint parent configuration (parents in index
/// order, first parent most significant) and one column per state of v.
class DiscreteNetwork {
 public:
  DiscreteNetwork(CausalDag dag, std::vector<int> cardinalities, std::vector<Eigen::MatrixXd> cpts);

  const CausalDag& dag() const noexcept { return dag_; }
  const std::vector<int>& cardinalities() const noexcept { return cardinalities_; }
  const Eigen::MatrixXd& cpt(Vertex v) const { return cpts_.at(v); }

  /// Row of cpts[v] for the given full assignment.
  Eigen::Index parent_configuration(Vertex v, const std::vector<int>& assignment) const;

  Dataset sample(std::size_t n, std::uint64_t seed) const;

 private:
  CausalDag dag_;
  std::vector<int> cardinalities_;
  std::vector<Eigen::MatrixXd> cpts_;
};

}  // namespace diffgraph
