// SPDX-License-Identifier: MIT

#include "qnetsim/rng.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qnet {
namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = kFnvOffset;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

RngStream RngStream::derive(std::string_view component_id) const {
  return derive(fnv1a64(component_id));
}

RngStream RngStream::derive(std::uint64_t key) const {
  return RngStream(splitmix64(seed_ ^ splitmix64(key)));
}

double RngStream::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

bool RngStream::bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("bernoulli probability must be in [0, 1]");
  }
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return uniform01() < p;
}

std::uint64_t RngStream::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below bound must be positive");
  // Reject draws at or above the largest multiple of bound representable.
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - kMax % bound;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return draw % bound;
}

std::uint64_t RngStream::poisson(double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw std::invalid_argument("poisson mean must be finite and non-negative");
  }
  std::uint64_t total = 0;
  // Split large means so exp(-chunk) stays well above double underflow.
  while (mean > 50.0) {
    total += poisson(50.0);
    mean -= 50.0;
  }
  if (mean == 0.0) return total;
  const double floor = std::exp(-mean);
  double product = 1.0;
  std::uint64_t count = 0;
  for (;;) {
    product *= uniform01();
    if (product <= floor) break;
    ++count;
  }
  return total + count;
}

}  // namespace qnet
