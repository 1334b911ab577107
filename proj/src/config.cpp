// SPDX-License-Identifier: MIT

#include "qnetsim/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace qnet {
namespace {

std::string trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "' needs a numeric value, got '" + value + "'");
  }
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "' needs an integer value, got '" + value + "'");
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(value, &used);
    if (used != value.size() || value.find('-') != std::string::npos) {
      throw std::invalid_argument("not unsigned");
    }
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "' needs an unsigned integer value, got '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError("key '" + key + "' needs true or false, got '" + value + "'");
}

SweepRow parse_sweep_row(const std::string& value) {
  std::vector<double> parts;
  std::stringstream stream(value);
  std::string item;
  while (std::getline(stream, item, ',')) {
    parts.push_back(parse_double("sweep.row", trim(item)));
  }
  if (parts.size() != 3) {
    throw ConfigError("key 'sweep.row' needs 3 comma-separated values "
                      "(memory_fidelity, cnot_bitflip, x_bitflip), got '" + value + "'");
  }
  return {parts[0], parts[1], parts[2]};
}

void apply_key(ScenarioConfig& config, const std::string& section, const std::string& key,
               const std::string& value) {
  const std::string full = section.empty() ? key : section + "." + key;

  if (section.empty()) {
    if (key == "scenario") { config.scenario = value; return; }
    if (key == "seed") { config.seed = parse_u64(full, value); config.seed_from_file = true; return; }
    if (key == "trials") { config.trials = parse_int(full, value); return; }
    if (key == "pairs") { config.pairs = static_cast<int>(parse_int(full, value)); return; }
    if (key == "trace") { config.trace = parse_bool(full, value); return; }
  } else if (section == "input") {
    if (key == "alpha_re") { config.input.alpha.real(parse_double(full, value)); return; }
    if (key == "alpha_im") { config.input.alpha.imag(parse_double(full, value)); return; }
    if (key == "beta_re") { config.input.beta.real(parse_double(full, value)); return; }
    if (key == "beta_im") { config.input.beta.imag(parse_double(full, value)); return; }
  } else if (section == "memory") {
    if (key == "frequency") { config.memory.frequency = parse_double(full, value); return; }
    if (key == "coherence_time") { config.memory.coherence_time = parse_double(full, value); return; }
    if (key == "efficiency") { config.memory.efficiency = parse_double(full, value); return; }
    if (key == "fidelity") { config.memory.fidelity = parse_double(full, value); return; }
    if (key == "relax_time_ps") { config.memory.relax_override_ps = parse_int(full, value); return; }
  } else if (section == "detector") {
    if (key == "efficiency") { config.detector.efficiency = parse_double(full, value); return; }
    if (key == "dark_count_rate") { config.detector.dark_count_rate = parse_double(full, value); return; }
    if (key == "time_resolution") { config.detector.time_resolution = parse_double(full, value); return; }
    if (key == "max_count_rate") { config.detector.max_count_rate = parse_double(full, value); return; }
  } else if (section == "channel") {
    if (key == "length") { config.channel.length = parse_double(full, value); return; }
    if (key == "attenuation") { config.channel.attenuation = parse_double(full, value); return; }
    if (key == "propagation_speed") { config.channel.propagation_speed = parse_double(full, value); return; }
  } else if (section == "classical") {
    if (key == "length") { config.classical.length = parse_double(full, value); return; }
    if (key == "propagation_speed") { config.classical.propagation_speed = parse_double(full, value); return; }
  } else if (section == "noise") {
    if (key == "cnot_px") { config.noise.cnot_noise.px = parse_double(full, value); return; }
    if (key == "cnot_py") { config.noise.cnot_noise.py = parse_double(full, value); return; }
    if (key == "cnot_pz") { config.noise.cnot_noise.pz = parse_double(full, value); return; }
    if (key == "h_px") { config.noise.h_noise.px = parse_double(full, value); return; }
    if (key == "h_py") { config.noise.h_noise.py = parse_double(full, value); return; }
    if (key == "h_pz") { config.noise.h_noise.pz = parse_double(full, value); return; }
    if (key == "correction_x_px") { config.noise.correction_x_noise.px = parse_double(full, value); return; }
    if (key == "correction_x_py") { config.noise.correction_x_noise.py = parse_double(full, value); return; }
    if (key == "correction_x_pz") { config.noise.correction_x_noise.pz = parse_double(full, value); return; }
    if (key == "correction_z_px") { config.noise.correction_z_noise.px = parse_double(full, value); return; }
    if (key == "correction_z_py") { config.noise.correction_z_noise.py = parse_double(full, value); return; }
    if (key == "correction_z_pz") { config.noise.correction_z_noise.pz = parse_double(full, value); return; }
    if (key == "measurement_flip") { config.noise.measurement_flip = parse_double(full, value); return; }
  } else if (section == "entanglement") {
    if (key == "max_attempts") { config.max_attempts = static_cast<int>(parse_int(full, value)); return; }
  } else if (section == "sweep") {
    if (key == "row") { config.sweep.push_back(parse_sweep_row(value)); return; }
  } else {
    throw ConfigError("unknown section '" + section + "'");
  }
  throw ConfigError("unknown key '" + full + "'");
}

void check_range(double value, const char* key, double lo, double hi) {
  if (!(value >= lo && value <= hi)) {
    std::ostringstream msg;
    msg << key << " = " << value << " is outside [" << lo << ", " << hi << "]";
    throw ConfigError(msg.str());
  }
}

void check_noise_block(const NoiseConfig& noise) {
  const struct { const char* key; double value; } entries[] = {
      {"noise.cnot_px", noise.cnot_noise.px}, {"noise.cnot_py", noise.cnot_noise.py},
      {"noise.cnot_pz", noise.cnot_noise.pz}, {"noise.h_px", noise.h_noise.px},
      {"noise.h_py", noise.h_noise.py}, {"noise.h_pz", noise.h_noise.pz},
      {"noise.correction_x_px", noise.correction_x_noise.px},
      {"noise.correction_x_py", noise.correction_x_noise.py},
      {"noise.correction_x_pz", noise.correction_x_noise.pz},
      {"noise.correction_z_px", noise.correction_z_noise.px},
      {"noise.correction_z_py", noise.correction_z_noise.py},
      {"noise.correction_z_pz", noise.correction_z_noise.pz},
      {"noise.measurement_flip", noise.measurement_flip},
  };
  for (const auto& entry : entries) check_range(entry.value, entry.key, 0.0, 1.0);
  const struct { const char* name; double total; } sums[] = {
      {"noise.cnot_p*", noise.cnot_noise.total()},
      {"noise.h_p*", noise.h_noise.total()},
      {"noise.correction_x_p*", noise.correction_x_noise.total()},
      {"noise.correction_z_p*", noise.correction_z_noise.total()},
  };
  for (const auto& sum : sums) {
    if (sum.total > 1.0) {
      throw ConfigError(std::string(sum.name) + " components sum above 1");
    }
  }
}

}  // namespace

BkHardware ScenarioConfig::hardware() const {
  return BkHardware{memory, memory, detector, channel, channel, classical};
}

void ScenarioConfig::validate() const {
  if (scenario != "ideal_entanglement" && scenario != "pfaff_benchmark" &&
      scenario != "fidelity_sweep") {
    throw ConfigError("scenario = '" + scenario +
                      "' is not one of ideal_entanglement, pfaff_benchmark, fidelity_sweep");
  }
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (pairs < 1) throw ConfigError("pairs must be at least 1");
  if (max_attempts < 1) throw ConfigError("entanglement.max_attempts must be at least 1");

  try {
    input.validate();
  } catch (const std::exception&) {
    throw ConfigError("input.alpha/input.beta must satisfy |alpha|^2 + |beta|^2 = 1");
  }
  try {
    hardware().validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  check_noise_block(noise);

  for (const SweepRow& row : sweep) {
    check_range(row.memory_fidelity, "sweep.row memory_fidelity", 0.25, 1.0);
    check_range(row.cnot_bitflip, "sweep.row cnot_bitflip", 0.0, 1.0);
    check_range(row.x_bitflip, "sweep.row x_bitflip", 0.0, 1.0);
  }
  if (scenario == "fidelity_sweep" && sweep.empty()) {
    throw ConfigError("scenario fidelity_sweep needs at least one sweep.row");
  }
}

ScenarioConfig parse_config(const std::string& text) {
  ScenarioConfig config;
  std::istringstream stream(text);
  std::string raw;
  int line_number = 0;
  std::string section;
  while (std::getline(stream, raw)) {
    ++line_number;
    const std::size_t comment = raw.find_first_of("#;");
    std::string line = trim(comment == std::string::npos ? raw : raw.substr(0, comment));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("line " + std::to_string(line_number) + ": unterminated section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_number) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(line_number) + ": empty key");
    }
    apply_key(config, section, key, value);
  }
  return config;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot open config file: " + path.string());
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace qnet
