#pragma once

#include <json.hpp>

#include "patrolgame/allocation.hpp"
#include "patrolgame/graph.hpp"
#include "patrolgame/markov.hpp"
#include "patrolgame/oracles.hpp"
#include "patrolgame/strategy.hpp"

namespace patrolgame {

using Json = nlohmann::ordered_json;

// Every float written by these helpers is rounded to 12 significant digits,
// so repeated runs produce byte-identical documents. Node labels are 1-based.

double round_significant(double value, int digits = 12);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"family", "n", "n_p", "n_q", "edges"}; edges only for "general".
FamilySpec graph_spec_from_json(const Json& j);
Json graph_spec_to_json(const GraphTopology& graph);
Family family_from_string(const std::string& name);

Json to_json(const FeasibilityReport& report);
Json to_json(const CaptureReport& report);
Json to_json(const SimulationReport& report);
Json to_json(const StrategyResult& result);
Json to_json(const AllocationResult& result);
Json to_json(const SuiteReport& report);

}  // namespace patrolgame
