#pragma once

// Slow, independent reference implementations used only by the tests. None of
// them call into the library's algorithms; they share the Graph container.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "leafspan/graph.hpp"

namespace oracle {

using leafspan::Edge;
using leafspan::Graph;
using leafspan::VertexId;

/// Number of spanning trees by the matrix-tree theorem (fraction-free Bareiss).
std::int64_t kirchhoffTreeCount(const Graph& g);

/// Plain DFS reachability.
bool connected(const Graph& g);

/// Minimum leaf count over all (n-1)-edge subsets that form a spanning tree,
/// plus the number of such trees. Feasible up to roughly 20 edges.
struct BruteTrees {
  std::size_t minLeaves = 0;
  std::uint64_t count = 0;
  // Leaf sets of every tree attaining minLeaves.
  std::vector<std::vector<VertexId>> optimalLeafSets;
};
BruteTrees bruteSpanningTrees(const Graph& g);

/// Hamiltonian path by plain backtracking.
bool hasHamiltonianPath(const Graph& g);

/// Largest independent set by subset scan (n <= 24).
int bruteIndependenceNumber(const Graph& g);

/// Minimum degree sum over independent pairs; nullopt for complete graphs.
std::optional<int> bruteSigma2(const Graph& g);

/// Lexicographically smallest adjacency string over all n! relabellings (n <= 8).
std::string bruteCanonicalString(const Graph& g);

/// Bridges by deleting each edge and testing connectivity.
std::vector<Edge> bruteBridges(const Graph& g);

/// Articulation points by deleting each vertex.
std::vector<VertexId> bruteArticulationPoints(const Graph& g);

/// Smallest vertex set whose removal disconnects g (n-1 for complete graphs).
std::size_t bruteVertexConnectivity(const Graph& g);

/// Connected graphs with max degree <= 3 on n vertices, up to isomorphism,
/// counted by scanning every edge subset (n <= 6).
std::size_t bruteSubcubicCount(std::size_t n);

/// Uniform perfect matching of 3n points, rejected until the result is a
/// simple connected cubic graph. n must be even and >= 4.
Graph randomCubic(std::size_t n, std::mt19937_64& rng);

/// A random tree with max degree 3, grown by attaching each new vertex to a
/// uniformly chosen vertex of degree < 3. Returned as a graph on n vertices.
Graph randomSubcubicTree(std::size_t n, std::mt19937_64& rng);

/// A uniformly random relabelling of g.
Graph shuffled(const Graph& g, std::mt19937_64& rng);

}  // namespace oracle
