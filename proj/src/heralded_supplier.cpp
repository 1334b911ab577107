// SPDX-License-Identifier: MIT

#include "qnetsim/heralded_supplier.hpp"

#include <bit>

namespace qnet {

HeraldedResourceSupplier::HeraldedResourceSupplier(const BkHardware& hw, int max_attempts,
                                                   RngStream rng, int memory_a, int memory_b)
    : hw_(hw),
      max_attempts_(max_attempts),
      memory_a_(memory_a),
      memory_b_(memory_b),
      rng_(std::move(rng)) {
  hw_.validate();
}

ResourceSupplier::Supplied HeraldedResourceSupplier::next() {
  const EntanglementRecord record =
      run_until_entangled(memory_a_, memory_b_, hw_, max_attempts_, timeline_, rng_);

  // Consumption is immediate in this mode; the decay hook still runs so a
  // future storage interval would weaken the pair the same way.
  const SimTime stored = timeline_.now() - record.completion_time;
  const double fidelity =
      decayed_fidelity(record.fidelity, stored, hw_.memory_a.coherence_time);

  ++records_;
  if (record.fidelity > 0.25) ++genuine_records_;
  fidelity_sum_ += fidelity;
  attempts_sum_ += static_cast<std::uint64_t>(record.attempts);

  const std::pair<int, std::uint64_t> key{static_cast<int>(record.sign),
                                          std::bit_cast<std::uint64_t>(fidelity)};
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    it = cache_
             .emplace(key, PureEnsemble::from_density_matrix(
                               werner_from_fidelity(fidelity, record.sign)))
             .first;
  }
  return {&it->second, record.sign};
}

double HeraldedResourceSupplier::mean_fidelity() const {
  return records_ == 0 ? 0.0 : fidelity_sum_ / static_cast<double>(records_);
}

double HeraldedResourceSupplier::mean_attempts() const {
  return records_ == 0 ? 0.0 : static_cast<double>(attempts_sum_) / static_cast<double>(records_);
}

}  // namespace qnet
