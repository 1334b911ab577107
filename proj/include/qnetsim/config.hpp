// SPDX-License-Identifier: MIT
//
// Scenario configuration: an INI-style text file with [section] headers and
// key = value lines. Unknown keys are errors so typos never silently fall
// back to defaults. The full key reference lives in the README.

#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "qnetsim/barrett_kok.hpp"
#include "qnetsim/hardware.hpp"
#include "qnetsim/teleport.hpp"

namespace qnet {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepRow {
  double memory_fidelity;
  double cnot_bitflip;
  double x_bitflip;
};

struct ScenarioConfig {
  std::string scenario = "ideal_entanglement";
  std::uint64_t seed = 1;
  bool seed_from_file = false;  // lets the CLI apply its seed priority rules
  std::int64_t trials = 100000;
  int pairs = 10;
  bool trace = false;
  InputState input;  // defaults to |0>
  MemoryParams memory;
  DetectorParams detector;
  QuantumChannelParams channel;  // both arms share one block
  ClassicalChannelParams classical;
  NoiseConfig noise;
  int max_attempts = 1000;
  std::vector<SweepRow> sweep;

  // Symmetric pair hardware assembled from the shared blocks.
  BkHardware hardware() const;

  // Throws ConfigError naming the offending key and its constraint.
  void validate() const;
};

ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::filesystem::path& path);

}  // namespace qnet
