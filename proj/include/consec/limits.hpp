#pragma once

#include <cstdint>
#include <stop_token>

#include "consec/error.hpp"

namespace consec {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Budget and cooperative cancellation for exhaustive searches. A search that
/// runs out of either throws `ErrorCode::Timeout`; partial results are never
/// returned.
struct SearchLimits {
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::stop_token stop;
};

/// Per-call node counter bound to a `SearchLimits`.
class SearchMeter {
 public:
  explicit SearchMeter(const SearchLimits& limits) : limits_(limits) {}

  void tick(std::uint64_t nodes = 1) {
    used_ += nodes;
    if (used_ > limits_.node_budget)
      throw Error(ErrorCode::Timeout, "node budget exhausted");
    if (used_ >= next_stop_check_) {
      next_stop_check_ = used_ + 4096;
      check_stop();
    }
  }

  void check_stop() const {
    if (limits_.stop.stop_requested())
      throw Error(ErrorCode::Timeout, "cancelled");
  }

  std::uint64_t used() const { return used_; }

 private:
  const SearchLimits& limits_;
  std::uint64_t used_ = 0;
  std::uint64_t next_stop_check_ = 4096;
};

}  // namespace consec
