// SPDX-License-Identifier: MIT

#include "qnetsim/barrett_kok.hpp"

#include <algorithm>
#include <cmath>

namespace qnet {

const std::array<BranchAmplitude, 4>& plus_plus_branches() {
  static const std::array<BranchAmplitude, 4> branches{{
      {Branch::UpUp, {0.5, 0.0}},
      {Branch::UpDown, {0.5, 0.0}},
      {Branch::DownUp, {0.5, 0.0}},
      {Branch::DownDown, {0.5, 0.0}},
  }};
  return branches;
}

Branch sample_branch(RngStream& rng) {
  switch (rng.uniform_below(4)) {
    case 0: return Branch::UpUp;
    case 1: return Branch::UpDown;
    case 2: return Branch::DownUp;
    default: return Branch::DownDown;
  }
}

Branch x_flipped(Branch branch) {
  switch (branch) {
    case Branch::UpUp: return Branch::DownDown;
    case Branch::UpDown: return Branch::DownUp;
    case Branch::DownUp: return Branch::UpDown;
    case Branch::DownDown: return Branch::UpUp;
  }
  throw std::logic_error("unknown branch");
}

int excitation_count(Branch branch) {
  switch (branch) {
    case Branch::UpUp: return 0;
    case Branch::UpDown:
    case Branch::DownUp: return 1;
    case Branch::DownDown: return 2;
  }
  throw std::logic_error("unknown branch");
}

std::optional<int> RoundClicks::sole_detector() const {
  if (total() != 1) return std::nullopt;
  return detector_clicks[0] == 1 ? 0 : 1;
}

const char* to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::ZeroClicksRound1: return "zero-clicks-r1";
    case FailureReason::MultiClickRound1: return "multi-click-r1";
    case FailureReason::ZeroClicksRound2: return "zero-clicks-r2";
    case FailureReason::MultiClickRound2: return "multi-click-r2";
  }
  throw std::logic_error("unknown failure reason");
}

Verdict classify(const RoundClicks& round1, const RoundClicks& round2) {
  if (round1.total() == 0) return {std::nullopt, FailureReason::ZeroClicksRound1};
  if (round1.total() > 1) return {std::nullopt, FailureReason::MultiClickRound1};
  if (round2.total() == 0) return {std::nullopt, FailureReason::ZeroClicksRound2};
  if (round2.total() > 1) return {std::nullopt, FailureReason::MultiClickRound2};
  const bool same = *round1.sole_detector() == *round2.sole_detector();
  return {same ? BellKind::PsiPlus : BellKind::PsiMinus, std::nullopt};
}

void BkHardware::validate() const {
  memory_a.validate();
  memory_b.validate();
  detector.validate();
  channel_a.validate();
  channel_b.validate();
  classical.validate();
  if (propagation_delay(channel_a) != propagation_delay(channel_b)) {
    throw std::invalid_argument(
        "channel arms have unequal propagation delays; photons must reach the beamsplitter "
        "at the same time");
  }
}

double BkHardware::survival(int side) const {
  if (side != 0 && side != 1) throw std::out_of_range("side must be 0 or 1");
  const MemoryParams& mem = side == 0 ? memory_a : memory_b;
  const QuantumChannelParams& chan = side == 0 ? channel_a : channel_b;
  return mem.efficiency * transmission_probability(chan) * detector.efficiency;
}

double BkHardware::pair_fidelity() const {
  return std::sqrt(memory_a.fidelity * memory_b.fidelity);
}

RoundClicks run_round(const PairAttemptState& pair, const BkHardware& hw, int round_index,
                      RngStream& rng) {
  if (round_index != 1 && round_index != 2) {
    throw std::invalid_argument("round index must be 1 or 2");
  }
  hw.validate();

  const bool down_a =
      pair.branch == Branch::DownUp || pair.branch == Branch::DownDown;
  const bool down_b =
      pair.branch == Branch::UpDown || pair.branch == Branch::DownDown;

  // Fixed draw order: side a emission/transmission/detection, then side b,
  // then routing, then dark injection. Keeps traces reproducible.
  int arriving = 0;
  const MemoryState down_state{Spin::Down, std::nullopt};
  if (down_a && excite_and_emit(hw.memory_a, down_state, rng) &&
      rng.bernoulli(transmission_probability(hw.channel_a)) &&
      rng.bernoulli(hw.detector.efficiency)) {
    ++arriving;
  }
  if (down_b && excite_and_emit(hw.memory_b, down_state, rng) &&
      rng.bernoulli(transmission_probability(hw.channel_b)) &&
      rng.bernoulli(hw.detector.efficiency)) {
    ++arriving;
  }

  RoundClicks clicks;
  if (arriving > 0) {
    // One photon exits a uniformly random port; two indistinguishable
    // photons bunch and exit the same (random) port together.
    const auto port = static_cast<std::size_t>(rng.uniform_below(2));
    clicks.detector_clicks[port] += arriving;
    clicks.photon_clicks = arriving;
  }
  if (rng.bernoulli(hw.dark_window_prob())) {
    clicks.dark_click = true;
    clicks.detector_clicks[static_cast<std::size_t>(rng.uniform_below(2))] += 1;
  }
  return clicks;
}

bool AttemptOutcome::genuine() const {
  if (!verdict.success() || !round2) return false;
  return excitation_count(branch) == 1 && round1.genuine_single() && round2->genuine_single();
}

AttemptOutcome attempt_once(const BkHardware& hw, RngStream& rng) {
  AttemptOutcome outcome{sample_branch(rng), {}, std::nullopt, {}};
  PairAttemptState state{outcome.branch};
  outcome.round1 = run_round(state, hw, 1, rng);
  if (outcome.round1.total() == 1) {
    state.branch = x_flipped(state.branch);
    outcome.round2 = run_round(state, hw, 2, rng);
  }
  outcome.verdict = classify(outcome.round1, outcome.round2.value_or(RoundClicks{}));
  return outcome;
}

NotEntangledError::NotEntangledError(int memory_a_in, int memory_b_in, int attempts_in,
                                     int round1_count_in, int round2_count_in)
    : std::runtime_error("pair " + std::to_string(memory_a_in) + "-" +
                         std::to_string(memory_b_in) + " not entangled after " +
                         std::to_string(attempts_in) + " attempts"),
      memory_a(memory_a_in),
      memory_b(memory_b_in),
      attempts(attempts_in),
      round1_count(round1_count_in),
      round2_count(round2_count_in) {}

namespace {

// Probability of exactly one click in a round where `photons` independent
// photons each arrive with probability q, with dark probability d.
double single_click_probability(int photons, double q, double d) {
  switch (photons) {
    case 0:
      return d;
    case 1:
      return q * (1.0 - d) + (1.0 - q) * d;
    case 2:
      // Two survivors bunch into two clicks on one detector, so a single
      // click needs exactly one survivor and no dark, or none and a dark.
      return 2.0 * q * (1.0 - q) * (1.0 - d) + (1.0 - q) * (1.0 - q) * d;
    default:
      throw std::invalid_argument("at most two photons per round");
  }
}

}  // namespace

double success_probability_oracle(double q, double dark_window_prob) {
  if (!(q >= 0.0 && q <= 1.0)) throw std::domain_error("survival probability must be in [0, 1]");
  if (!(dark_window_prob >= 0.0 && dark_window_prob <= 1.0)) {
    throw std::domain_error("dark window probability must be in [0, 1]");
  }
  const double d = dark_window_prob;
  // Branches of |+>|+>: up-up and down-down swap roles across the X flip,
  // the two one-excitation branches stay one-excitation.
  const double zero_then_two = single_click_probability(0, q, d) * single_click_probability(2, q, d);
  const double one_then_one = single_click_probability(1, q, d) * single_click_probability(1, q, d);
  return 2.0 * 0.25 * zero_then_two + 0.5 * one_then_one;
}

double genuine_success_probability_oracle(double q, double dark_window_prob) {
  if (!(q >= 0.0 && q <= 1.0)) throw std::domain_error("survival probability must be in [0, 1]");
  if (!(dark_window_prob >= 0.0 && dark_window_prob <= 1.0)) {
    throw std::domain_error("dark window probability must be in [0, 1]");
  }
  const double photon_single = q * (1.0 - dark_window_prob);
  return 0.5 * photon_single * photon_single;
}

double decayed_fidelity(double fidelity, SimTime dt, double coherence_time_s) {
  if (dt.ps < 0) throw std::invalid_argument("decay interval must be non-negative");
  if (!(coherence_time_s > 0.0)) throw std::invalid_argument("coherence time must be positive");
  const double p = werner_parameter(fidelity) * std::exp(-dt.seconds() / coherence_time_s);
  return (3.0 * p + 1.0) / 4.0;
}

EntanglementSession::EntanglementSession(int memory_a, int memory_b, const BkHardware& hw,
                                         int max_attempts, Timeline& timeline, RngStream rng)
    : memory_a_(memory_a),
      memory_b_(memory_b),
      hw_(hw),
      max_attempts_(max_attempts),
      timeline_(timeline),
      rng_(std::move(rng)) {
  if (max_attempts_ < 1) throw std::invalid_argument("max_attempts must be at least 1");
  hw_.validate();
}

std::string EntanglementSession::tag(const char* step) const {
  return "pair" + std::to_string(memory_a_) + "-" + std::to_string(memory_b_) + "." + step;
}

void EntanglementSession::start() { schedule_pulse1(SimTime{0}); }

void EntanglementSession::schedule_pulse1(SimTime delay) {
  timeline_.schedule(delay, tag("pulse1"), [this] { on_pulse1(); });
}

void EntanglementSession::on_pulse1() {
  ++attempts_;
  ++round1_count_;
  pair_.branch = sample_branch(rng_);
  round1_ = run_round(pair_, hw_, 1, rng_);

  const SimTime herald_known = hw_.photon_travel() + hw_.herald_window() + hw_.classical_delay();
  if (round1_.total() == 1) {
    const SimTime pulse2 = std::max(hw_.relax_time(), herald_known);
    timeline_.schedule(pulse2, tag("pulse2"), [this] { on_pulse2(); });
    return;
  }
  // Round-1 failure: the verdict reaches the nodes after herald_known, then
  // the memories re-prepare for one relax time.
  const Verdict verdict = classify(round1_, RoundClicks{});
  timeline_.schedule(herald_known, tag("verdict"),
                     [this, verdict] { on_verdict(verdict, false); });
}

void EntanglementSession::on_pulse2() {
  ++round2_count_;
  pair_.branch = x_flipped(pair_.branch);
  const RoundClicks round2 = run_round(pair_, hw_, 2, rng_);
  const Verdict verdict = classify(round1_, round2);
  const bool genuine = excitation_count(pair_.branch) == 1 && round1_.genuine_single() &&
                       round2.genuine_single();
  const SimTime herald_known = hw_.photon_travel() + hw_.herald_window() + hw_.classical_delay();
  timeline_.schedule(herald_known, tag("verdict"),
                     [this, verdict, genuine] { on_verdict(verdict, genuine); });
}

void EntanglementSession::on_verdict(Verdict verdict, bool genuine) {
  if (verdict.success()) {
    const double fidelity = genuine ? hw_.pair_fidelity() : 0.25;
    record_ = EntanglementRecord{memory_a_,      memory_b_, timeline_.now(),
                                 *verdict.sign,  attempts_, round1_count_,
                                 round2_count_,  fidelity,
                                 werner_from_fidelity(fidelity, *verdict.sign)};
    return;
  }
  if (attempts_ >= max_attempts_) {
    exhausted_ = true;
    return;
  }
  schedule_pulse1(hw_.relax_time());
}

const EntanglementRecord& EntanglementSession::require_record() const {
  if (!record_) {
    throw NotEntangledError(memory_a_, memory_b_, attempts_, round1_count_, round2_count_);
  }
  return *record_;
}

EntanglementRecord run_until_entangled(int memory_a, int memory_b, const BkHardware& hw,
                                       int max_attempts, Timeline& timeline, RngStream& rng) {
  EntanglementSession session(memory_a, memory_b, hw, max_attempts, timeline,
                              RngStream(rng.next_u64()));
  session.start();
  timeline.run_all();
  return session.require_record();
}

}  // namespace qnet
