// SPDX-License-Identifier: MIT
//
// Command-line driver: loads a scenario config, applies seed overrides,
// runs the scenario, and writes the report files.

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qnetsim/config.hpp"
#include "qnetsim/report.hpp"
#include "qnetsim/scenarios.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

std::optional<std::uint64_t> env_seed() {
  const char* raw = std::getenv("QNET_SIM_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument(raw);
    return static_cast<std::uint64_t>(value);
  } catch (const std::exception&) {
    throw qnet::ConfigError(std::string("QNET_SIM_SEED is not an unsigned integer: '") + raw +
                            "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete-event simulator for heralded entanglement and noisy teleportation"};
  app.require_subcommand(1);

  std::string config_path;
  std::string scenario_override;
  std::optional<std::uint64_t> seed_override;
  std::optional<std::int64_t> trials_override;
  std::string out_dir = "out";
  std::string format_name = "csv";

  CLI::App* run = app.add_subcommand("run", "Run one scenario and write its report");
  run->add_option("--config", config_path, "Scenario config file")->required();
  run->add_option("--scenario", scenario_override,
                  "Override the scenario named in the config file");
  run->add_option("--seed", seed_override, "Override the RNG seed");
  run->add_option("--trials", trials_override, "Override the trial count");
  run->add_option("--out-dir", out_dir, "Output directory (created if missing)");
  run->add_option("--format", format_name, "Report format: csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    qnet::ScenarioConfig config = qnet::load_config(config_path);
    // Seed priority: --seed, then the config file, then QNET_SIM_SEED,
    // then the built-in default.
    if (seed_override.has_value()) {
      config.seed = *seed_override;
    } else if (!config.seed_from_file) {
      if (const auto env = env_seed(); env.has_value()) config.seed = *env;
    }
    if (!scenario_override.empty()) config.scenario = scenario_override;
    if (trials_override.has_value()) config.trials = *trials_override;
    const qnet::OutputFormat format = qnet::parse_format(format_name);
    config.validate();

    const qnet::RunReport report = qnet::run_scenario(config);
    const auto written = qnet::emit_report(report, out_dir, format);
    for (const auto& name : written) {
      std::cout << name << '\n';
    }
    return kExitOk;
  } catch (const qnet::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}
