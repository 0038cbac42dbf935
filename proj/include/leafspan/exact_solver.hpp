#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leafspan/budget.hpp"
#include "leafspan/graph.hpp"
#include "leafspan/spanning_tree.hpp"

namespace leafspan {

enum class SearchVerdict { Found, Absent, BudgetExceeded };

struct TreeSearchResult {
  SearchVerdict verdict = SearchVerdict::Absent;
  std::optional<SpanningTree> tree;
  std::uint64_t nodes = 0;
};

struct PathSearchResult {
  SearchVerdict verdict = SearchVerdict::Absent;
  std::vector<VertexId> path;
  std::uint64_t nodes = 0;
};

inline constexpr std::size_t kMaxHamiltonianDpOrder = 24;

/// Branch and bound for a spanning tree with at most k leaves. The partial
/// tree grows from vertex 0; pruning uses the branch-vertex excess (a tree of
/// max degree d has 2 + sum(max(0, deg-2)) leaves), forced leaves, and the
/// pendant-block bound of the graph that is still available.
TreeSearchResult hasTreeAtMostKLeaves(const Graph& g, std::size_t k, Budget budget = {});
TreeSearchResult hasTreeAtMostKLeaves(Graph&& g, std::size_t k, Budget budget = {}) = delete;

/// Subset DP over (visited set, endpoint). Throws ErrorCode::BudgetExceeded
/// when n > kMaxHamiltonianDpOrder.
PathSearchResult hamiltonianPathDP(const Graph& g, Budget budget = {});

enum class SolveStatus { Exact, HeuristicOnly, Timeout };

std::string_view statusName(SolveStatus status);

struct SolveOutcome {
  std::size_t minLeaves = 0;        // best leaf count found
  SpanningTree witness;
  std::size_t lowerBoundUsed = 0;   // structural bound the deepening started from
  std::size_t provenLowerBound = 0; // every smaller count was refuted; == minLeaves when exact
  SolveStatus status = SolveStatus::Exact;
  std::uint64_t nodesExplored = 0;
  std::chrono::milliseconds elapsed{0};
};

/// Minimum-leaf spanning tree by iterative deepening on k, starting at the
/// pendant-block bound and stopping at the heuristic upper bound. The k = 2
/// level is decided by hamiltonianPathDP when n <= kMaxHamiltonianDpOrder.
SolveOutcome minLeafSpanningTree(const Graph& g, Budget budget = {});
// The witness points into g; solving a temporary would leave it dangling.
SolveOutcome minLeafSpanningTree(Graph&& g, Budget budget = {}) = delete;

/// Witness file: graph6 line, tree edges, then "minLeaves=<k> status=<s> lb=<b>".
std::string formatWitness(const SolveOutcome& outcome);

struct ParsedWitness {
  Graph graph;
  std::vector<Edge> edges;
  std::optional<std::size_t> minLeaves;
  std::string status;
  std::optional<std::size_t> lowerBound;
};

ParsedWitness parseWitness(std::string_view text);

}  // namespace leafspan
