#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "leafspan/graph.hpp"

namespace leafspan {

/// A spanning tree of a host graph, stored as a sorted edge set plus tree
/// degrees. The host is not owned and must outlive the tree.
class SpanningTree {
 public:
  /// Validates that `edges` are n-1 distinct host edges forming an acyclic,
  /// connected subgraph. Throws ErrorCode::InvalidArgument otherwise.
  static SpanningTree fromEdges(const Graph& host, std::vector<Edge> edges);
  // The tree keeps a pointer to its host, so temporaries are rejected.
  static SpanningTree fromEdges(Graph&& host, std::vector<Edge> edges) = delete;

  const Graph& host() const { return *host_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t degree(VertexId v) const { return degree_[v]; }
  const std::vector<std::uint32_t>& degrees() const { return degree_; }
  bool contains(Edge e) const;

  std::size_t leafCount() const;
  std::vector<VertexId> leaves() const;
  std::vector<std::vector<VertexId>> adjacency() const;

  friend bool operator==(const SpanningTree& a, const SpanningTree& b) { return a.edges_ == b.edges_; }

 private:
  SpanningTree(const Graph& host, std::vector<Edge> edges, std::vector<std::uint32_t> degree)
      : host_(&host), edges_(std::move(edges)), degree_(std::move(degree)) {}

  const Graph* host_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> degree_;

  friend SpanningTree swapUnchecked(const SpanningTree&, Edge, Edge);
};

/// edgeSwap without validation; callers must already know `remove` lies on the
/// fundamental cycle of `add`.
SpanningTree swapUnchecked(const SpanningTree& t, Edge add, Edge remove);

/// Tree-degree partition: k leaves (degree 1), n1 degree-2 vertices, p
/// degree-3 vertices, `higher` for degree >= 4 (never present in subcubic hosts).
struct LeafStats {
  std::size_t k = 0;
  std::size_t n1 = 0;
  std::size_t p = 0;
  std::size_t higher = 0;
  std::vector<VertexId> leafSet;
};

/// Counts tree degrees. When the tree has maximum degree <= 3 and at least two
/// vertices, k == p + 2 is checked and a violation throws std::logic_error.
LeafStats leafStats(const SpanningTree& t);

/// The unique cycle of t + e, as the tree path from e.u to e.v.
std::vector<VertexId> fundamentalCycle(const SpanningTree& t, Edge e);

/// Adds `add`, removes `remove`. `remove` must lie on the fundamental cycle of `add`.
SpanningTree edgeSwap(const SpanningTree& t, Edge add, Edge remove);

/// Leaf-pair reduction: closes the cycle through the first host-adjacent pair
/// of leaves and drops the cycle edge giving the fewest leaves. Requires at
/// least three leaves; returns nullopt when no two leaves are host-adjacent.
std::optional<SpanningTree> adjacentLeafMove(const SpanningTree& t);

/// True iff no two leaves of t are adjacent in the host.
bool leavesIndependent(const SpanningTree& t);

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

struct TreeEnumeration {
  std::uint64_t count = 0;
  bool truncated = false;
};

/// Visits every spanning tree of a connected graph exactly once, stopping
/// after `cap` trees. Throws ErrorCode::Disconnected on disconnected input.
TreeEnumeration enumerateSpanningTrees(const Graph& g, std::uint64_t cap,
                                       const std::function<void(const SpanningTree&)>& visit);

/// Witness text: host graph6 line followed by sorted "u v" tree edges.
std::string formatTree(const SpanningTree& t);

}  // namespace leafspan
