#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "leafspan/graph.hpp"

namespace leafspan {

/// Canonical encoding: the graph6 string of the canonically relabelled graph.
/// Equal exactly for isomorphic graphs.
struct CanonicalLabel {
  std::string bytes;

  friend auto operator<=>(const CanonicalLabel&, const CanonicalLabel&) = default;
  friend bool operator==(const CanonicalLabel&, const CanonicalLabel&) = default;
};

struct CanonicalForm {
  CanonicalLabel label;
  std::vector<VertexId> position;  // vertex -> canonical index
};

inline constexpr std::size_t kMaxCanonicalOrder = 64;
inline constexpr std::uint64_t kDefaultCanonicalNodeBudget = 20'000'000;

/// Individualisation-refinement search: cells of an ordered partition are
/// split by neighbour counts until equitable, the first non-singleton cell is
/// individualised in every possible way, and the lexicographically smallest
/// column-major upper-triangle bit string over all leaves is kept. Branches
/// whose fixed prefix already exceeds the best are cut.
CanonicalForm canonicalForm(std::span<const std::uint64_t> adjacency,
                            std::uint64_t nodeBudget = kDefaultCanonicalNodeBudget);
CanonicalForm canonicalForm(const Graph& g, std::uint64_t nodeBudget = kDefaultCanonicalNodeBudget);
CanonicalLabel canonicalLabel(const Graph& g);
Graph canonicalGraph(const Graph& g);

}  // namespace leafspan
