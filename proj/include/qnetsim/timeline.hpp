// SPDX-License-Identifier: MIT
//
// Single-threaded discrete-event kernel. Events fire in (time, insertion)
// order, so equal-time events run first-scheduled-first and every run with
// the same schedule is identical.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qnetsim/sim_time.hpp"

namespace qnet {

class Timeline {
 public:
  SimTime now() const { return now_; }

  // Queues an action at now() + delay; delay must be non-negative.
  // Returns the event's insertion sequence number.
  std::uint64_t schedule(SimTime delay, std::string tag, std::function<void()> action);

  // Fires every event with fire time <= horizon (horizon >= now()), then
  // advances now() to the horizon even if nothing fired. Returns the number
  // of events executed. Actions may schedule further events.
  std::size_t run_until(SimTime horizon);

  // Drains the queue completely; now() ends at the last fired event.
  std::size_t run_all();

  // When enabled, records one "<fire_ps>\t<sequence>\t<tag>" line per event.
  void enable_trace(bool on) { trace_enabled_ = on; }
  const std::vector<std::string>& trace() const { return trace_; }

  std::size_t pending() const { return heap_.size(); }

 private:
  struct Event {
    SimTime fire;
    std::uint64_t sequence;
    std::string tag;
    std::function<void()> action;
  };

  // Min-heap on (fire, sequence); kept as a vector so the top can be moved out.
  static bool later(const Event& a, const Event& b);
  Event pop_next();
  void fire(Event ev);

  std::vector<Event> heap_;
  SimTime now_{};
  std::uint64_t next_sequence_ = 0;
  bool trace_enabled_ = false;
  std::vector<std::string> trace_;
};

}  // namespace qnet
