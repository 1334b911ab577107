// SPDX-License-Identifier: MIT

#include "qnetsim/timeline.hpp"

#include <algorithm>
#include <stdexcept>

namespace qnet {

bool Timeline::later(const Event& a, const Event& b) {
  if (a.fire != b.fire) return a.fire > b.fire;
  return a.sequence > b.sequence;
}

std::uint64_t Timeline::schedule(SimTime delay, std::string tag, std::function<void()> action) {
  if (delay.ps < 0) {
    throw std::invalid_argument("cannot schedule event '" + tag + "' with negative delay");
  }
  const std::uint64_t sequence = next_sequence_++;
  heap_.push_back(Event{now_ + delay, sequence, std::move(tag), std::move(action)});
  std::push_heap(heap_.begin(), heap_.end(), later);
  return sequence;
}

Timeline::Event Timeline::pop_next() {
  std::pop_heap(heap_.begin(), heap_.end(), later);
  Event ev = std::move(heap_.back());
  heap_.pop_back();
  return ev;
}

void Timeline::fire(Event ev) {
  now_ = ev.fire;
  if (trace_enabled_) {
    trace_.push_back(std::to_string(ev.fire.ps) + '\t' + std::to_string(ev.sequence) + '\t' + ev.tag);
  }
  try {
    ev.action();
  } catch (const std::exception& e) {
    throw std::runtime_error("event '" + ev.tag + "' at t=" + std::to_string(ev.fire.ps) +
                             " ps failed: " + e.what());
  }
}

std::size_t Timeline::run_until(SimTime horizon) {
  if (horizon < now_) {
    throw std::invalid_argument("run_until horizon precedes current time");
  }
  std::size_t fired = 0;
  while (!heap_.empty() && heap_.front().fire <= horizon) {
    fire(pop_next());
    ++fired;
  }
  now_ = horizon;
  return fired;
}

std::size_t Timeline::run_all() {
  std::size_t fired = 0;
  while (!heap_.empty()) {
    fire(pop_next());
    ++fired;
  }
  return fired;
}

}  // namespace qnet
