// SPDX-License-Identifier: MIT
//
// Two-round double-heralded entanglement generation. Each attempt prepares
// both memories in |+>, pi-pulses them so the spin-down population emits a
// photon toward a midpoint beamsplitter, and requires exactly one detector
// click in each of two rounds (with an X flip on both spins in between).
// Same detector twice heralds psi+, different detectors herald psi-.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "qnetsim/density_matrix.hpp"
#include "qnetsim/hardware.hpp"
#include "qnetsim/rng.hpp"
#include "qnetsim/states.hpp"
#include "qnetsim/timeline.hpp"

namespace qnet {

// Joint spin configuration of the two memories, tracked at the branch level:
// |+>|+> is an equal superposition of these four, and the click statistics
// only depend on which branch the detection event projects onto.
enum class Branch { UpUp, UpDown, DownUp, DownDown };

struct BranchAmplitude {
  Branch branch;
  std::complex<double> amplitude;
};

// The four-branch expansion of |+>|+>; squared amplitudes sum to 1.
const std::array<BranchAmplitude, 4>& plus_plus_branches();

// Projects the fresh |+>|+> preparation onto one branch (uniform weights).
Branch sample_branch(RngStream& rng);

// The inter-round X flip on both spins.
Branch x_flipped(Branch branch);

// Photons a pi-pulse can extract from this branch (number of down spins).
int excitation_count(Branch branch);

struct RoundClicks {
  std::array<int, 2> detector_clicks{0, 0};
  int photon_clicks = 0;   // clicks backed by real photons
  bool dark_click = false; // a dark count fired this round

  int total() const { return detector_clicks[0] + detector_clicks[1]; }

  // Detector index when exactly one click happened, else empty.
  std::optional<int> sole_detector() const;

  // Exactly one click and it came from a photon.
  bool genuine_single() const { return total() == 1 && photon_clicks == 1; }
};

enum class FailureReason { ZeroClicksRound1, MultiClickRound1, ZeroClicksRound2, MultiClickRound2 };

const char* to_string(FailureReason reason);

struct Verdict {
  std::optional<BellKind> sign;  // PsiPlus or PsiMinus
  std::optional<FailureReason> failure;

  bool success() const { return sign.has_value(); }
};

// Herald rule: exactly one click in each round; same detector -> psi+,
// different detectors -> psi-. Failures report the first violated rule
// (round 1 before round 2, zero clicks before multi-click).
Verdict classify(const RoundClicks& round1, const RoundClicks& round2);

// Hardware shared by one memory pair. Both arms must reach the beamsplitter
// simultaneously, so asymmetric propagation delays are rejected.
struct BkHardware {
  MemoryParams memory_a;
  MemoryParams memory_b;
  DetectorParams detector;
  QuantumChannelParams channel_a;
  QuantumChannelParams channel_b;
  ClassicalChannelParams classical;

  void validate() const;

  SimTime photon_travel() const { return propagation_delay(channel_a); }
  SimTime herald_window() const { return SimTime::from_seconds(detector.time_resolution); }
  SimTime classical_delay() const { return propagation_delay(classical); }
  SimTime relax_time() const { return memory_a.relax_time(); }

  // End-to-end photon survival for side 0 (memory_a arm) or 1.
  double survival(int side) const;

  double dark_window_prob() const {
    return dark_click_probability(detector, herald_window().seconds());
  }

  // Geometric mean of the two memory fidelities.
  double pair_fidelity() const;
};

// Protocol-phase state for one attempt: the branch the pair currently sits in.
struct PairAttemptState {
  Branch branch;
};

// One pulse-and-detect round: emissions sampled per branch side, photons
// thinned by channel and detector efficiency, one surviving photon routed to
// a uniform detector, two surviving photons bunched onto the same uniform
// detector, and at most one dark click injected per heralding window.
// round_index is 1 or 2 (diagnostics only; the branch carries the phase).
RoundClicks run_round(const PairAttemptState& pair, const BkHardware& hw, int round_index,
                      RngStream& rng);

struct AttemptOutcome {
  Branch branch;                      // branch during round 1
  RoundClicks round1;
  std::optional<RoundClicks> round2;  // absent when round 1 already failed
  Verdict verdict;

  // Photon-backed single click in both rounds on a one-excitation branch:
  // the heralded state really is the signed Bell state.
  bool genuine() const;
};

// Full two-round attempt without timeline bookkeeping.
AttemptOutcome attempt_once(const BkHardware& hw, RngStream& rng);

struct EntanglementRecord {
  int memory_a;
  int memory_b;
  SimTime completion_time;
  BellKind sign;
  int attempts;      // attempt cycles started (= round-1 executions)
  int round1_count;  // rounds of each kind this pair passed through
  int round2_count;
  double fidelity;   // Bell overlap assigned to `state`
  DensityMatrix state;
};

class NotEntangledError : public std::runtime_error {
 public:
  NotEntangledError(int memory_a, int memory_b, int attempts, int round1_count, int round2_count);

  int memory_a;
  int memory_b;
  int attempts;
  int round1_count;
  int round2_count;
};

// Per-attempt success probability given end-to-end survival q and the
// probability of a dark click per heralding window.
double success_probability_oracle(double q, double dark_window_prob = 0.0);

// Probability that an attempt succeeds with photon-backed clicks in both
// rounds (heralds carrying the true Bell state).
double genuine_success_probability_oracle(double q, double dark_window_prob = 0.0);

// Bell overlap of a stored pair after waiting dt with the given coherence
// time: the Werner parameter decays as exp(-dt/coherence_time).
double decayed_fidelity(double fidelity, SimTime dt, double coherence_time_s);

// Event-driven protocol instance for one memory pair on a shared timeline.
// Timing per attempt pulsed at T: clicks are latched at T + travel + window;
// the verdict reaches the nodes one classical delay later; round 2 pulses at
// max(T + relax, verdict arrival); after a failure the next attempt starts
// one relax time after the verdict arrival.
class EntanglementSession {
 public:
  EntanglementSession(int memory_a, int memory_b, const BkHardware& hw, int max_attempts,
                      Timeline& timeline, RngStream rng);

  // Schedules the first attempt at timeline.now().
  void start();

  bool done() const { return record_.has_value() || exhausted_; }
  const std::optional<EntanglementRecord>& record() const { return record_; }
  bool exhausted() const { return exhausted_; }

  int attempts() const { return attempts_; }
  int round1_count() const { return round1_count_; }
  int round2_count() const { return round2_count_; }

  // Throws NotEntangledError when the attempt budget ran out.
  const EntanglementRecord& require_record() const;

 private:
  void schedule_pulse1(SimTime delay);
  void on_pulse1();
  void on_pulse2();
  void on_verdict(Verdict verdict, bool genuine);
  std::string tag(const char* step) const;

  int memory_a_;
  int memory_b_;
  BkHardware hw_;
  int max_attempts_;
  Timeline& timeline_;
  RngStream rng_;

  int attempts_ = 0;
  int round1_count_ = 0;
  int round2_count_ = 0;
  PairAttemptState pair_{Branch::UpUp};
  RoundClicks round1_{};
  std::optional<EntanglementRecord> record_;
  bool exhausted_ = false;
};

// Runs one pair to completion on the given timeline (draining its events).
EntanglementRecord run_until_entangled(int memory_a, int memory_b, const BkHardware& hw,
                                       int max_attempts, Timeline& timeline, RngStream& rng);

}  // namespace qnet
