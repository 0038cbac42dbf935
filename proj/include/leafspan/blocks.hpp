#pragma once

#include <cstddef>
#include <vector>

#include "leafspan/graph.hpp"

namespace leafspan {

/// Bridge structure of a connected graph.
///
/// `components` are the 2-edge-connected components as vertex sets (a vertex
/// incident only to bridges forms a singleton component). Contracting each
/// component yields the bridge tree; `pendantBlockCount` counts its leaves.
struct BlockCutStructure {
  std::vector<Edge> bridges;
  std::vector<std::vector<VertexId>> components;
  std::vector<std::size_t> componentOf;
  std::size_t pendantBlockCount = 0;
  std::size_t vertexConnectivity = 0;
  std::vector<VertexId> articulationPoints;
};

/// Bridges only; works on disconnected graphs too.
std::vector<Edge> findBridges(const Graph& g);

/// Throws ErrorCode::Disconnected on disconnected input.
BlockCutStructure blockCutDecomposition(const Graph& g);

/// Exact vertex connectivity (n-1 for complete graphs, 0 when disconnected).
std::size_t vertexConnectivity(const Graph& g);

}  // namespace leafspan
