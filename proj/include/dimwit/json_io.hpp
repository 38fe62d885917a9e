#pragma once

#include "json.hpp"

#include "dimwit/analysis.hpp"
#include "dimwit/optimize.hpp"
#include "dimwit/scenario.hpp"
#include "dimwit/witness.hpp"

namespace dimwit {

using Json = nlohmann::json;

// Malformed documents raise std::invalid_argument.

Json to_json(const Behavior& behavior);
Behavior behavior_from_json(const Json& j);

// Complex matrices are [[[re, im], ...], ...], row-major.
Json to_json(const HermitianMatrix& m);
HermitianMatrix hermitian_from_json(const Json& j);

Json to_json(const QuantumStrategy& strategy);
QuantumStrategy quantum_strategy_from_json(const Json& j);

Json to_json(const ClassicalStrategy& strategy);
ClassicalStrategy classical_strategy_from_json(const Json& j);

Json to_json(const WitnessReport& report);
Json to_json(const DecompositionResult& result);
Json to_json(const OptimizationResult& result);

}  // namespace dimwit
