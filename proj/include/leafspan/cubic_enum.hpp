#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "leafspan/graph.hpp"

namespace leafspan {

enum class EnumerationMethod {
  /// Every BFS-labelled connected cubic graph by degree-constrained
  /// backtracking, deduplicated by canonical label.
  CanonicalFilter,
  /// Connected induced prefixes grown one vertex at a time, one canonical
  /// representative kept per level.
  VertexExtension,
};

/// One representative per isomorphism class, in canonical form, sorted by
/// canonical label.
struct CubicUniverse {
  std::size_t n = 0;
  std::vector<Graph> graphs;
  std::vector<std::string> labels;
  bool oddOrder = false;
  std::string note;
};

/// All connected cubic graphs on n vertices up to isomorphism. Odd n yields an
/// empty universe with oddOrder set.
CubicUniverse enumerateConnectedCubic(std::size_t n, EnumerationMethod method = EnumerationMethod::CanonicalFilter,
                                      std::size_t jobs = 1);

/// Universe read from a graph6 stream. Every record must be a connected cubic
/// graph on n vertices; isomorphic duplicates are dropped.
CubicUniverse universeFromGraph6(std::size_t n, std::string_view text);

/// All connected graphs with maximum degree <= 3 on n vertices, up to isomorphism.
std::vector<Graph> enumerateConnectedSubcubic(std::size_t n);

}  // namespace leafspan
