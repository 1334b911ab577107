// SPDX-License-Identifier: MIT
//
// Device parameter blocks and the physical sampling primitives built on
// them: photon emission, fiber transmission, and click detection.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qnetsim/rng.hpp"
#include "qnetsim/sim_time.hpp"

namespace qnet {

struct MemoryParams {
  double frequency = 8.0e7;       // attempt repetition rate, Hz
  double coherence_time = 1.0;    // seconds
  double efficiency = 1.0;        // photon collection probability
  double fidelity = 1.0;          // Bell overlap of a freshly heralded pair
  std::optional<std::int64_t> relax_override_ps;  // overrides the 1/frequency relax time

  void validate() const;

  // Spin relax/re-prepare time between attempts: ceil(1/frequency) in ps
  // unless overridden.
  SimTime relax_time() const;
};

struct DetectorParams {
  double efficiency = 1.0;        // click probability per arriving photon
  double dark_count_rate = 0.0;   // Hz
  double time_resolution = 1e-9;  // seconds; also the heralding window width
  double max_count_rate = 1e9;    // Hz; dead time is its reciprocal

  void validate() const;

  double dead_time_s() const { return 1.0 / max_count_rate; }
};

struct QuantumChannelParams {
  double length = 3.0;              // meters
  double attenuation = 0.2;         // dB/km
  double propagation_speed = 2e8;   // m/s

  void validate() const;
};

struct ClassicalChannelParams {
  double length = 3.0;             // meters
  double propagation_speed = 2e8;  // m/s

  void validate() const;
};

// Survival probability through the fiber: 10^(-attenuation_dB_per_km * km / 10).
double transmission_probability(const QuantumChannelParams& channel);

// One-way travel time, rounded to the nearest picosecond.
SimTime propagation_delay(double length_m, double speed_mps);
SimTime propagation_delay(const QuantumChannelParams& channel);
SimTime propagation_delay(const ClassicalChannelParams& channel);

// Probability of at least one dark count in a window: 1 - exp(-rate * window).
double dark_click_probability(const DetectorParams& detector, double window_s);

// Excited exists only transiently between a pi-pulse and relaxation;
// PlusSuperposition is the pre-attempt preparation, resolved to Up/Down by
// the entanglement engine before any pulse is simulated.
enum class Spin { Up, Down, PlusSuperposition, Excited };

struct MemoryState {
  Spin spin = Spin::PlusSuperposition;
  std::optional<int> entangled_with;  // peer memory index once heralded
};

// Optical pi-pulse on a branch-resolved spin: Down emits a photon with
// probability `efficiency`, Up never emits. PlusSuperposition and Excited are
// not legal pulse inputs and throw std::logic_error.
bool excite_and_emit(const MemoryParams& memory, const MemoryState& state, RngStream& rng);

// Click times for photon arrivals in [window_begin, window_end): arrivals are
// thinned by efficiency, Poisson dark counts are added uniformly over the
// window, clicks within the dead time of the previous click are dropped, and
// surviving times are quantized to the time resolution. Output is sorted.
std::vector<SimTime> detect(const DetectorParams& detector, std::vector<SimTime> arrivals,
                            SimTime window_begin, SimTime window_end, RngStream& rng);

}  // namespace qnet
