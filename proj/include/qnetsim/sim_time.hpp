// SPDX-License-Identifier: MIT
//
// Integer simulation time. Picosecond ticks avoid float drift in event order.

#pragma once

#include <cmath>
#include <compare>
#include <cstdint>

namespace qnet {

struct SimTime {
  std::int64_t ps = 0;

  friend constexpr auto operator<=>(SimTime, SimTime) = default;

  constexpr SimTime operator+(SimTime rhs) const { return SimTime{ps + rhs.ps}; }
  constexpr SimTime operator-(SimTime rhs) const { return SimTime{ps - rhs.ps}; }
  constexpr SimTime& operator+=(SimTime rhs) {
    ps += rhs.ps;
    return *this;
  }

  double seconds() const { return static_cast<double>(ps) * 1e-12; }

  static SimTime from_seconds(double s) { return SimTime{std::llround(s * 1e12)}; }
};

constexpr SimTime operator*(std::int64_t n, SimTime t) { return SimTime{n * t.ps}; }

}  // namespace qnet
