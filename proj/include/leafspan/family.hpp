#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "leafspan/graph.hpp"

namespace leafspan {

/// A 5-vertex pendant gadget. Position i holds the vertex playing role i+1 of
/// the pattern {12, 15, 23, 24, 34, 35, 45}; position 0 is the attachment
/// vertex whose third edge is the bridge to the rest of the graph.
using Branch = std::array<VertexId, 5>;

inline constexpr std::array<std::pair<int, int>, 7> kBranchPattern{
    {{0, 1}, {0, 4}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}};

inline constexpr int kMaxFamilyLevel = 6;

/// One member of the extremal family: a cubic graph built from pendant
/// branches hanging off a tree of junction vertices.
struct FamilyLevel {
  int m = 1;
  Graph graph;
  std::vector<VertexId> junctions;
  std::vector<Branch> branches;

  std::size_t order() const { return graph.order(); }
  std::size_t branchCount() const { return branches.size(); }
};

/// 18 * 2^(m-1) - 2.
std::size_t familyOrder(int m);
/// 3 * 2^(m-1).
std::size_t familyBranchCount(int m);

/// The 16-vertex base graph: centre 0 with branches {1..5}, {6..10}, {11..15}.
FamilyLevel buildG1();

/// Replaces each branch (a1..a5) by two branches hanging off a1: a1 becomes a
/// junction, a3 and a4 are reused as new vertices and six more are appended.
FamilyLevel expandOnce(const FamilyLevel& level);

/// buildG1 followed by m-1 expansions. Throws for m outside [1, kMaxFamilyLevel].
FamilyLevel buildGm(int m);

/// Throws ErrorCode::InvalidArgument when a structural invariant fails.
void checkFamilyLevel(const FamilyLevel& level);

/// {"m", "order", "branchCount", "bridges"} as one JSON object.
std::string familySidecarJson(const FamilyLevel& level);

}  // namespace leafspan
