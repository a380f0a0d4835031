#pragma once

// Hand-built discrete networks used as ground truth for the adjustment
// estimator.

#include "diffgraph/simulate.hpp"

namespace diffgraph::testing {

/// Binary chain W -> X -> Y.
DiscreteNetwork chain_network();

/// Binary W1 -> X, W1 -> Y, X -> Y: the confounded core of the single-changed-
/// exposure reference graph (adjust for W1).
DiscreteNetwork confounded_network();

/// Ternary W1 -> X -> W2 -> Y with W1 -> Y and X -> Y: a full DAG of the same
/// reference graph, mediator included (adjust for W1 only).
DiscreteNetwork mediated_network();

/// Y -> X with X otherwise isolated: the exposure has no effect on the outcome.
DiscreteNetwork reverse_network();

}  // namespace diffgraph::testing
