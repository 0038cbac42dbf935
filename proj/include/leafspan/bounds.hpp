#pragma once

#include <climits>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "leafspan/graph.hpp"

namespace leafspan {

/// floor((2n+4)/9) for cubic orders n >= 8; nullopt below the hypothesis range.
std::optional<int> theoremBound(std::size_t n);

/// floor((n+2)/6).
int conjectureBound(std::size_t n);

/// max(2, number of pendant blocks). Never exceeds the minimum leaf count of
/// any spanning tree; 0 for the one-vertex graph.
std::size_t leafBlockLowerBound(const Graph& g);

/// Sentinel returned by sigmaK when no independent k-set exists.
inline constexpr int kNoIndependentSet = INT_MAX;

inline constexpr std::uint64_t kDefaultExactNodeBudget = 50'000'000;

/// Minimum degree sum over independent k-sets (kNoIndependentSet when none).
/// Throws ErrorCode::BudgetExceeded past `nodeBudget` search nodes.
int sigmaK(const Graph& g, int k, std::uint64_t nodeBudget = kDefaultExactNodeBudget);

/// Size of a maximum independent set; exact for n <= 64.
int independenceNumber(const Graph& g, std::uint64_t nodeBudget = kDefaultExactNodeBudget);

/// Degree-sum and independence conditions that guarantee k-ended spanning trees.
struct ConditionReport {
  std::string graphId;  // graph6
  int sigma2 = 0;       // kNoIndependentSet for complete graphs
  int alpha = 0;
  int connectivity = 0;
  bool oreTraceable = false;
  int btKEnded = 2;
  std::optional<int> winKEnded;
};

/// Throws ErrorCode::Disconnected on disconnected input.
ConditionReport sufficientKEnded(const Graph& g, std::uint64_t nodeBudget = kDefaultExactNodeBudget);

/// One JSON object, no trailing newline.
std::string toJsonLine(const ConditionReport& report);

enum class ClosureMode { HamiltonianPath, HamiltonianCycle };

/// Repeatedly joins non-adjacent pairs whose degree sum reaches n-1 (path
/// mode) or n (cycle mode). A non-zero seed scans pairs in a shuffled order
/// each round; the fixpoint does not depend on it.
Graph bondyChvatalClosure(const Graph& g, ClosureMode mode, std::uint64_t shuffleSeed = 0);

}  // namespace leafspan
