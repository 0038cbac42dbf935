#pragma once

#include <cstddef>
#include <cstdint>

#include "leafspan/graph.hpp"
#include "leafspan/spanning_tree.hpp"

namespace leafspan {

enum class InitialStrategy { Dfs, Bfs, Randomized };

struct SearchPolicy {
  InitialStrategy initial = InitialStrategy::Dfs;
  std::size_t restarts = 8;             // roots tried when n > 64
  bool acceptFirstImprovement = true;   // false: best swap of each pass
  std::size_t maxPasses = 1'000'000;    // improving moves per local search
  std::uint64_t seed = 1;
  bool useSwaps = true;                 // false: leaf-pair move only
};

/// Initial tree grown from `root`. DFS visits neighbours in increasing id
/// order; Randomized is a DFS with a seeded shuffle of each neighbour list.
SpanningTree buildInitialTree(const Graph& g, VertexId root, InitialStrategy strategy, std::uint64_t seed = 1);
SpanningTree buildInitialTree(Graph&& g, VertexId root, InitialStrategy strategy, std::uint64_t seed = 1) = delete;

/// Leaf count after swapping `add` in and `remove` out.
std::size_t leafCountAfterSwap(const SpanningTree& t, Edge add, Edge remove);

/// Local search with the leaf-pair move and strictly improving
/// fundamental-cycle swaps. The result never has more leaves than `t`.
SpanningTree reduceLeaves(const Graph& g, SpanningTree t, const SearchPolicy& policy = {});

/// Runs reduceLeaves from the restart schedule (every root when n <= 64,
/// otherwise policy.restarts seeded roots) and keeps the best tree. Stops
/// early once `target` leaves are reached.
SpanningTree bestHeuristicTree(const Graph& g, const SearchPolicy& policy = {}, std::size_t target = 2);
SpanningTree bestHeuristicTree(Graph&& g, const SearchPolicy& policy = {}, std::size_t target = 2) = delete;

}  // namespace leafspan
