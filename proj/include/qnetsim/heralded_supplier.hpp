// SPDX-License-Identifier: MIT
//
// Resource supplier that backs every teleportation trial with a fresh
// heralded entanglement run, the integrated end-to-end mode.

#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "qnetsim/barrett_kok.hpp"
#include "qnetsim/teleport.hpp"
#include "qnetsim/timeline.hpp"

namespace qnet {

class HeraldedResourceSupplier : public ResourceSupplier {
 public:
  HeraldedResourceSupplier(const BkHardware& hw, int max_attempts, RngStream rng,
                           int memory_a = 0, int memory_b = 1);

  // Runs the protocol to the next herald on the supplier's own timeline.
  // Propagates NotEntangledError when the attempt budget runs out.
  Supplied next() override;

  std::uint64_t records() const { return records_; }
  double mean_fidelity() const;
  double mean_attempts() const;
  std::uint64_t genuine_records() const { return genuine_records_; }
  const Timeline& timeline() const { return timeline_; }

 private:
  BkHardware hw_;
  int max_attempts_;
  int memory_a_;
  int memory_b_;
  Timeline timeline_;
  RngStream rng_;

  // Ensembles keyed by (sign, fidelity bits); heralds recur at few distinct
  // fidelities, so decompositions are reused across trials.
  std::map<std::pair<int, std::uint64_t>, PureEnsemble> cache_;

  std::uint64_t records_ = 0;
  std::uint64_t genuine_records_ = 0;
  double fidelity_sum_ = 0.0;
  std::uint64_t attempts_sum_ = 0;
};

}  // namespace qnet
