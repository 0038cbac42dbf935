#pragma once

#include <chrono>
#include <cstdint>

namespace leafspan {

/// Search limits. Zero means unlimited.
struct Budget {
  std::uint64_t maxNodes = 0;
  std::chrono::milliseconds timeLimit{0};
};

enum class BudgetState { Ok, NodesExhausted, TimeExpired };

/// Tracks node count and elapsed wall time against a Budget. The clock is
/// only read every 1024 ticks.
class BudgetMeter {
 public:
  explicit BudgetMeter(Budget budget) : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  /// Counts one node; returns the state after counting it.
  BudgetState tick() {
    ++nodes_;
    if (state_ != BudgetState::Ok) return state_;
    if (budget_.maxNodes != 0 && nodes_ > budget_.maxNodes) {
      state_ = BudgetState::NodesExhausted;
    } else if (budget_.timeLimit.count() != 0 && (nodes_ & 1023) == 0 && elapsed() > budget_.timeLimit) {
      state_ = BudgetState::TimeExpired;
    }
    return state_;
  }

  /// Forces a wall-clock check.
  BudgetState poll() {
    if (state_ == BudgetState::Ok && budget_.timeLimit.count() != 0 && elapsed() > budget_.timeLimit) {
      state_ = BudgetState::TimeExpired;
    }
    return state_;
  }

  BudgetState state() const { return state_; }
  std::uint64_t nodes() const { return nodes_; }
  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
  }

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  BudgetState state_ = BudgetState::Ok;
};

}  // namespace leafspan
