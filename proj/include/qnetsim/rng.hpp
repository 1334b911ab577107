// SPDX-License-Identifier: MIT
//
// Deterministic random streams. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; the distribution transforms here are
// hand-rolled because the std::*_distribution algorithms are not, and results
// must match bit-for-bit across platforms and standard libraries.

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace qnet {

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  // Root seed this stream was constructed with (not a position marker).
  std::uint64_t seed() const { return seed_; }

  // Child stream keyed by component id. Derivation depends only on this
  // stream's seed, never on how many values were drawn, so substreams are
  // independent of sibling usage order.
  RngStream derive(std::string_view component_id) const;
  RngStream derive(std::uint64_t key) const;

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01();

  // True with probability p; p = 0 and p = 1 are exact.
  bool bernoulli(double p);

  // Uniform integer in [0, bound), bound >= 1. Rejection sampling, unbiased.
  std::uint64_t uniform_below(std::uint64_t bound);

  // Poisson sample by repeated uniform products; mean must be finite and
  // non-negative. Large means are split additively to keep exp(-m) in range.
  std::uint64_t poisson(double mean);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace qnet
