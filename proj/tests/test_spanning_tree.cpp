#include <doctest.h>

#include <random>
#include <set>

#include "leafspan/error.hpp"
#include "leafspan/family.hpp"
#include "leafspan/graph6.hpp"
#include "leafspan/spanning_tree.hpp"
#include "support/oracles.hpp"

using namespace leafspan;

namespace {

// Every edge of a tree graph, as a SpanningTree of itself.
SpanningTree wholeTree(const Graph& treeGraph) { return SpanningTree::fromEdges(treeGraph, treeGraph.edges()); }

// The 4-leaf tree of G_1 used for the leaf-pair move: leaves 4, 5, 9, 14.
std::vector<Edge> fourLeafTreeOfG1() {
  return {{0, 1}, {0, 6},  {0, 11}, {1, 2},   {2, 3},   {3, 4},   {1, 5},  {6, 7},
          {7, 8}, {8, 10}, {10, 9}, {11, 12}, {12, 13}, {13, 15}, {15, 14}};
}

}  // namespace

TEST_SUITE("spanning_tree") {
  TEST_CASE("construction validates") {
    const Graph k4 = parseGraph6("C~");
    const SpanningTree star = SpanningTree::fromEdges(k4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(star.leafCount() == 3);
    CHECK(star.leaves() == std::vector<VertexId>{1, 2, 3});
    CHECK(star.degree(0) == 3);
    CHECK(star.contains(Edge(1, 0)));
    CHECK_THROWS_AS(SpanningTree::fromEdges(k4, {{0, 1}, {1, 2}}), Error);            // too few
    CHECK_THROWS_AS(SpanningTree::fromEdges(k4, {{0, 1}, {1, 2}, {0, 2}}), Error);    // cycle
    CHECK_THROWS_AS(SpanningTree::fromEdges(k4, {{0, 1}, {0, 1}, {2, 3}}), Error);    // repeat
    const std::vector<Edge> path{{0, 1}, {1, 2}, {2, 3}};
    const Graph p4 = Graph::fromEdges(4, path);
    CHECK_THROWS_AS(SpanningTree::fromEdges(p4, {{0, 1}, {1, 2}, {0, 3}}), Error);    // non-host edge
  }

  TEST_CASE("k = p + 2 on 1000 random subcubic trees") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
      const std::size_t n = 2 + i % 60;
      const Graph t = oracle::randomSubcubicTree(n, rng);
      const LeafStats s = leafStats(wholeTree(t));
      CHECK(s.higher == 0);
      CHECK(s.k == s.p + 2);
      CHECK(s.k + s.n1 + s.p == n);
    }
  }

  TEST_CASE("leafStats checks the identity only for max degree <= 3") {
    std::vector<Edge> star;
    for (VertexId v = 1; v <= 5; ++v) star.emplace_back(0, v);
    const Graph s5 = Graph::fromEdges(6, star);
    const LeafStats s = leafStats(wholeTree(s5));
    CHECK(s.k == 5);
    CHECK(s.higher == 1);
  }

  TEST_CASE("fundamental cycle and swap") {
    const Graph k4 = parseGraph6("C~");
    const SpanningTree path = SpanningTree::fromEdges(k4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(fundamentalCycle(path, Edge(0, 3)) == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(fundamentalCycle(path, Edge(3, 1)) == std::vector<VertexId>{1, 2, 3});
    CHECK_THROWS_AS(fundamentalCycle(path, Edge(0, 1)), Error);
    const SpanningTree swapped = edgeSwap(path, Edge(0, 3), Edge(1, 2));
    CHECK(swapped.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {2, 3}});
    CHECK(swapped.leafCount() == 2);
    CHECK_THROWS_AS(edgeSwap(path, Edge(1, 3), Edge(0, 1)), Error);  // not on the cycle
  }

  TEST_CASE("leaf-pair move on G_1 removes one leaf") {
    const FamilyLevel g1 = buildG1();
    const SpanningTree t = SpanningTree::fromEdges(g1.graph, fourLeafTreeOfG1());
    REQUIRE(t.leaves() == std::vector<VertexId>{4, 5, 9, 14});
    CHECK_FALSE(leavesIndependent(t));
    const auto moved = adjacentLeafMove(t);
    REQUIRE(moved.has_value());
    CHECK(moved->leafCount() == 3);
    CHECK(moved->contains(Edge(4, 5)));
    CHECK_NOTHROW(SpanningTree::fromEdges(g1.graph, moved->edges()));
  }

  TEST_CASE("leaf-pair move preconditions") {
    const Graph k4 = parseGraph6("C~");
    const SpanningTree path = SpanningTree::fromEdges(k4, {{0, 1}, {1, 2}, {2, 3}});
    try {
      adjacentLeafMove(path);
      FAIL("expected a precondition error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Precondition);
    }
    const Graph pet = parseGraph6("IheA@GUAo");
    const SpanningTree bfs = SpanningTree::fromEdges(pet, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {4, 3}, {4, 9}, {5, 7}, {5, 8}});
    CHECK(bfs.leaves() == std::vector<VertexId>{2, 3, 6, 7, 8, 9});
    CHECK_FALSE(leavesIndependent(bfs));

    const FamilyLevel g1 = buildG1();
    const SpanningTree optimal = SpanningTree::fromEdges(
        g1.graph, {{0, 1}, {0, 6}, {0, 11}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {6, 7}, {7, 8}, {8, 9}, {9, 10},
                   {11, 12}, {12, 13}, {13, 14}, {14, 15}});
    CHECK(optimal.leaves() == std::vector<VertexId>{5, 10, 15});
    CHECK(leavesIndependent(optimal));
    CHECK_FALSE(adjacentLeafMove(optimal).has_value());
  }

  TEST_CASE("tree counts match the matrix-tree theorem") {
    CHECK(enumerateSpanningTrees(parseGraph6("C~"), kDefaultEnumerationCap, [](const SpanningTree&) {}).count == 16);
    CHECK(enumerateSpanningTrees(parseGraph6("IheA@GUAo"), kDefaultEnumerationCap, [](const SpanningTree&) {}).count ==
          2000);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
      const Graph g = oracle::randomCubic(8 + 2 * (trial % 3), rng);
      std::set<std::vector<Edge>> seen;
      const auto e = enumerateSpanningTrees(g, kDefaultEnumerationCap, [&](const SpanningTree& t) {
        CHECK(t.edges().size() == g.order() - 1);
        seen.insert(t.edges());
      });
      CHECK(e.count == static_cast<std::uint64_t>(oracle::kirchhoffTreeCount(g)));
      CHECK(seen.size() == e.count);
      CHECK_FALSE(e.truncated);
    }
  }

  TEST_CASE("enumeration cap and errors") {
    const auto e = enumerateSpanningTrees(parseGraph6("C~"), 5, [](const SpanningTree&) {});
    CHECK(e.count == 5);
    CHECK(e.truncated);
    const std::vector<Edge> two{{0, 1}, {2, 3}};
    CHECK_THROWS_AS(enumerateSpanningTrees(Graph::fromEdges(4, two), 10, [](const SpanningTree&) {}), Error);
    CHECK(enumerateSpanningTrees(Graph::fromEdges(1, {}), 10, [](const SpanningTree&) {}).count == 1);
  }

  TEST_CASE("tree text starts with the host graph6 line") {
    const Graph k4 = parseGraph6("C~");
    const SpanningTree star = SpanningTree::fromEdges(k4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(formatTree(star) == "C~\n0 1\n0 2\n0 3\n");
  }
}
