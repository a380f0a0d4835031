#pragma once

#include <cstdint>

#include <json.hpp>

#include "diffgraph/estimate.hpp"
#include "diffgraph/identify.hpp"
#include "diffgraph/oracle.hpp"
#include "diffgraph/simulate.hpp"

namespace diffgraph {

using Json = nlohmann::ordered_json;

/// {kind, condition, adjustment_set, formula}; adjustment_set is null unless
/// the verdict is AdjustmentIdentifiable.
Json to_json(const IdentificationVerdict& verdict, const DirectedGraph& graph);

/// Verdict keys plus "witness": edge-list texts (NotIdentifiable only).
Json to_json(const OracleVerdict& verdict, const DirectedGraph& graph);

Json to_json(const InterventionalTable& table);
Json to_json(const CausalChangeReport& report);
Json to_json(const LinearScm& scm);

struct SimulationManifest {
  std::uint64_t seed = 0;
  std::size_t rows = 0;
  bool shared_order = false;
  const ScmPair* pair = nullptr;
};

Json to_json(const SimulationManifest& manifest);

}  // namespace diffgraph
