#include <doctest.h>

#include <random>

#include "leafspan/bounds.hpp"
#include "leafspan/error.hpp"
#include "leafspan/family.hpp"
#include "leafspan/graph6.hpp"
#include "leafspan/heuristic.hpp"
#include "support/oracles.hpp"

using namespace leafspan;

TEST_SUITE("heuristic") {
  TEST_CASE("initial trees are spanning trees") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
      const Graph g = oracle::randomCubic(10 + 2 * (trial % 8), rng);
      for (InitialStrategy s : {InitialStrategy::Dfs, InitialStrategy::Bfs, InitialStrategy::Randomized}) {
        const SpanningTree t = buildInitialTree(g, static_cast<VertexId>(trial % g.order()), s, trial);
        CHECK_NOTHROW(SpanningTree::fromEdges(g, t.edges()));
      }
    }
  }

  TEST_CASE("DFS from vertex 0 visits neighbours in increasing order") {
    const Graph k4 = parseGraph6("C~");
    CHECK(buildInitialTree(k4, 0, InitialStrategy::Dfs).edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(buildInitialTree(k4, 0, InitialStrategy::Bfs).edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  }

  TEST_CASE("bad roots and disconnected input") {
    const Graph k4 = parseGraph6("C~");
    CHECK_THROWS_AS(buildInitialTree(k4, 4, InitialStrategy::Dfs), Error);
    const std::vector<Edge> two{{0, 1}, {2, 3}};
    const Graph split = Graph::fromEdges(4, two);
    CHECK_THROWS_AS(buildInitialTree(split, 0, InitialStrategy::Bfs), Error);
  }

  TEST_CASE("swap leaf count matches the swapped tree") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
      const Graph g = oracle::randomCubic(12, rng);
      const SpanningTree t = buildInitialTree(g, 0, InitialStrategy::Bfs);
      for (const Edge& add : g.edges()) {
        if (t.contains(add)) continue;
        const auto cycle = fundamentalCycle(t, add);
        for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
          const Edge remove(cycle[i], cycle[i + 1]);
          CHECK(leafCountAfterSwap(t, add, remove) == edgeSwap(t, add, remove).leafCount());
        }
      }
    }
  }

  TEST_CASE("local search never increases leaves and never beats the optimum") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
      const Graph g = oracle::randomCubic(8 + 2 * (trial % 3), rng);
      const std::size_t optimum = oracle::bruteSpanningTrees(g).minLeaves;
      for (InitialStrategy s : {InitialStrategy::Dfs, InitialStrategy::Bfs, InitialStrategy::Randomized}) {
        const SpanningTree start = buildInitialTree(g, 0, s, trial);
        SearchPolicy policy;
        policy.acceptFirstImprovement = trial % 2 == 0;
        const SpanningTree end = reduceLeaves(g, start, policy);
        CHECK_NOTHROW(SpanningTree::fromEdges(g, end.edges()));
        CHECK(end.leafCount() <= start.leafCount());
        CHECK(end.leafCount() >= optimum);
      }
    }
  }

  TEST_CASE("leaf-pair moves alone still make progress") {
    const FamilyLevel g1 = buildG1();
    SearchPolicy policy;
    policy.useSwaps = false;
    const SpanningTree start = buildInitialTree(g1.graph, 0, InitialStrategy::Bfs);
    const SpanningTree end = reduceLeaves(g1.graph, start, policy);
    CHECK(end.leafCount() <= start.leafCount());
    CHECK(end.leafCount() >= 3);
  }

  TEST_CASE("reaches the pendant bound on the family") {
    for (int m = 1; m <= 4; ++m) {
      const FamilyLevel level = buildGm(m);
      const std::size_t lb = leafBlockLowerBound(level.graph);
      CHECK(bestHeuristicTree(level.graph, {}, lb).leafCount() == lb);
    }
  }

  TEST_CASE("restart schedule on large graphs is seeded") {
    const FamilyLevel g5 = buildGm(5);
    SearchPolicy policy;
    policy.restarts = 2;
    const SpanningTree a = bestHeuristicTree(g5.graph, policy, 48);
    const SpanningTree b = bestHeuristicTree(g5.graph, policy, 48);
    CHECK(a == b);
    CHECK(a.leafCount() >= 48);
  }
}
