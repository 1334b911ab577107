// SPDX-License-Identifier: MIT
//
// The named experiment scenarios: heralded-entanglement statistics under
// ideal settings, the published benchmark chain, and the noise-sensitivity
// sweep.

#pragma once

#include "qnetsim/config.hpp"
#include "qnetsim/report.hpp"

namespace qnet {

RunReport scenario_ideal_entanglement(const ScenarioConfig& config);
RunReport scenario_pfaff_benchmark(const ScenarioConfig& config);
RunReport scenario_fidelity_sweep(const ScenarioConfig& config);

// Validates the config and dispatches on config.scenario.
RunReport run_scenario(const ScenarioConfig& config);

// Exact mean teleported fidelity for the integrated chain: heralds are
// Werner states at the pair fidelity, diluted by the dark-count false-herald
// fraction, then pushed through the noisy circuit.
double integrated_chain_oracle(const ScenarioConfig& config, double memory_fidelity,
                               const NoiseConfig& noise);

}  // namespace qnet
