// SPDX-License-Identifier: MIT

#include "qnetsim/hardware.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qnet {
namespace {

void check_probability(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " = " + std::to_string(value) +
                                " is outside [0, 1]");
  }
}

void check_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument(std::string(name) + " must be positive and finite");
  }
}

void check_non_negative(double value, const char* name) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument(std::string(name) + " must be non-negative and finite");
  }
}

}  // namespace

void MemoryParams::validate() const {
  check_positive(frequency, "memory.frequency");
  check_positive(coherence_time, "memory.coherence_time");
  check_probability(efficiency, "memory.efficiency");
  if (!(fidelity >= 0.25 && fidelity <= 1.0)) {
    throw std::invalid_argument("memory.fidelity = " + std::to_string(fidelity) +
                                " is outside [0.25, 1]");
  }
  if (relax_override_ps && *relax_override_ps <= 0) {
    throw std::invalid_argument("memory.relax_time_ps must be positive");
  }
}

SimTime MemoryParams::relax_time() const {
  if (relax_override_ps) return SimTime{*relax_override_ps};
  return SimTime{static_cast<std::int64_t>(std::ceil(1e12 / frequency))};
}

void DetectorParams::validate() const {
  check_probability(efficiency, "detector.efficiency");
  check_non_negative(dark_count_rate, "detector.dark_count_rate");
  check_positive(time_resolution, "detector.time_resolution");
  check_positive(max_count_rate, "detector.max_count_rate");
}

void QuantumChannelParams::validate() const {
  check_non_negative(length, "channel.length");
  check_non_negative(attenuation, "channel.attenuation");
  check_positive(propagation_speed, "channel.propagation_speed");
}

void ClassicalChannelParams::validate() const {
  check_non_negative(length, "classical.length");
  check_positive(propagation_speed, "classical.propagation_speed");
}

double transmission_probability(const QuantumChannelParams& channel) {
  channel.validate();
  const double loss_db = channel.attenuation * channel.length / 1000.0;
  return std::pow(10.0, -loss_db / 10.0);
}

SimTime propagation_delay(double length_m, double speed_mps) {
  if (length_m < 0.0 || !(speed_mps > 0.0)) {
    throw std::invalid_argument("propagation delay needs length >= 0 and speed > 0");
  }
  return SimTime::from_seconds(length_m / speed_mps);
}

SimTime propagation_delay(const QuantumChannelParams& channel) {
  return propagation_delay(channel.length, channel.propagation_speed);
}

SimTime propagation_delay(const ClassicalChannelParams& channel) {
  return propagation_delay(channel.length, channel.propagation_speed);
}

double dark_click_probability(const DetectorParams& detector, double window_s) {
  if (!(window_s >= 0.0)) throw std::invalid_argument("dark click window must be non-negative");
  return -std::expm1(-detector.dark_count_rate * window_s);
}

bool excite_and_emit(const MemoryParams& memory, const MemoryState& state, RngStream& rng) {
  switch (state.spin) {
    case Spin::Up:
      return false;
    case Spin::Down:
      return rng.bernoulli(memory.efficiency);
    case Spin::PlusSuperposition:
      throw std::logic_error("pulse applied before the superposition branch was resolved");
    case Spin::Excited:
      throw std::logic_error("pulse applied to an already-excited memory");
  }
  throw std::logic_error("unknown spin state");
}

std::vector<SimTime> detect(const DetectorParams& detector, std::vector<SimTime> arrivals,
                            SimTime window_begin, SimTime window_end, RngStream& rng) {
  detector.validate();
  if (window_end < window_begin) throw std::invalid_argument("detection window ends before it begins");

  std::vector<SimTime> clicks;
  clicks.reserve(arrivals.size() + 2);

  std::sort(arrivals.begin(), arrivals.end());
  for (SimTime t : arrivals) {
    if (t < window_begin || t >= window_end) continue;
    if (rng.bernoulli(detector.efficiency)) clicks.push_back(t);
  }

  const double window_s = (window_end - window_begin).seconds();
  const std::uint64_t dark = rng.poisson(detector.dark_count_rate * window_s);
  const std::int64_t span = (window_end - window_begin).ps;
  for (std::uint64_t i = 0; i < dark; ++i) {
    clicks.push_back(window_begin + SimTime{static_cast<std::int64_t>(rng.uniform_below(
                                        static_cast<std::uint64_t>(span)))});
  }
  std::sort(clicks.begin(), clicks.end());

  const SimTime dead = SimTime::from_seconds(detector.dead_time_s());
  const SimTime resolution = SimTime::from_seconds(detector.time_resolution);
  std::vector<SimTime> out;
  out.reserve(clicks.size());
  std::optional<SimTime> last;
  for (SimTime t : clicks) {
    if (last && t - *last < dead) continue;
    last = t;
    // Quantize to the resolution grid (floor), but never before the window.
    std::int64_t q = resolution.ps > 0 ? (t.ps / resolution.ps) * resolution.ps : t.ps;
    out.push_back(SimTime{std::max(q, window_begin.ps)});
  }
  return out;
}

}  // namespace qnet
