#pragma once

#include <atomic>
#include <chrono>

namespace crossnum {

using Seconds = std::chrono::duration<double>;

/// Wall-clock deadline shared by the long-running searches.
class Deadline {
public:
  using Clock = std::chrono::steady_clock;

  static Deadline never() { return Deadline(Clock::time_point::max()); }
  static Deadline after(Seconds budget) {
    if (budget.count() > 1e9)
      return never();
    return Deadline(Clock::now() +
                    std::chrono::duration_cast<Clock::duration>(budget));
  }

  bool expired() const {
    return at_ != Clock::time_point::max() && Clock::now() >= at_;
  }

private:
  explicit Deadline(Clock::time_point at) : at_(at) {}
  Clock::time_point at_;
};

/// Amortizes clock reads inside hot loops.
class DeadlinePoller {
public:
  explicit DeadlinePoller(const Deadline &d, unsigned every = 64)
      : deadline_(d), every_(every) {}

  bool expired() {
    if (hit_)
      return true;
    if (++ticks_ % every_ == 0)
      hit_ = deadline_.expired();
    return hit_;
  }
  bool hit() const { return hit_; }

private:
  const Deadline &deadline_;
  unsigned every_;
  unsigned ticks_ = 0;
  bool hit_ = false;
};

} // namespace crossnum
