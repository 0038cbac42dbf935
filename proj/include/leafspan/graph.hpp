#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace leafspan {

using VertexId = std::uint32_t;

/// Largest order accepted anywhere in the library.
inline constexpr std::size_t kMaxOrder = 1000;

/// Undirected edge, always stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(VertexId x) const { return u == x || v == x; }
  VertexId other(VertexId x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are sorted. For n <= 64 a bitmask row per vertex is kept as
/// well, which the exponential algorithms (Hamiltonian DP, canonical labelling,
/// independence number) work on directly.
class Graph {
 public:
  Graph() = default;

  /// Builds from a list of pairs. Duplicate pairs are collapsed; loops and
  /// out-of-range endpoints throw.
  static Graph fromEdges(std::size_t n, std::span<const Edge> edges, bool* duplicatesCollapsed = nullptr);
  static Graph fromPairs(std::size_t n, std::span<const std::pair<VertexId, VertexId>> pairs,
                         bool* duplicatesCollapsed = nullptr);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }

  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  bool hasEdge(VertexId a, VertexId b) const;

  /// Sorted edge list.
  const std::vector<Edge>& edges() const { return edges_; }
  /// Position of an edge in edges(), or size() when absent.
  std::size_t edgeIndex(Edge e) const;

  std::size_t minDegree() const;
  std::size_t maxDegree() const;

  bool hasMasks() const { return !masks_.empty() || order() == 0; }
  /// Neighbour bitmask; only valid when order() <= 64.
  std::uint64_t mask(VertexId v) const { return masks_[v]; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.order() == b.order(); }

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> masks_;
};

struct Validation {
  bool connected = false;
  bool cubic = false;
};

/// Reports connectivity and 3-regularity; never throws.
Validation validate(const Graph& g);

bool isConnected(const Graph& g);
void requireConnected(const Graph& g, const char* context);

/// Returns g with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const VertexId> perm);

/// Edge-list text: first line "n m", then m lines "u v". '#' starts a comment.
Graph parseEdgeList(const std::string& text, bool* duplicatesCollapsed = nullptr);
std::string writeEdgeList(const Graph& g);

}  // namespace leafspan
