#include "leafspan/family.hpp"

#include <algorithm>

#include <json.hpp>

#include "leafspan/blocks.hpp"
#include "leafspan/error.hpp"

namespace leafspan {
namespace {

// Transcribed from the base drawing, including its repeated 13-14 edge.
constexpr std::array<std::pair<VertexId, VertexId>, 25> kG1Edges{{
    {0, 1},  {0, 6},   {0, 11},  {1, 2},   {1, 5},   {2, 3},   {2, 4},   {3, 5},   {3, 4},
    {4, 5},  {6, 7},   {6, 9},   {7, 8},   {7, 10},  {8, 10},  {8, 9},   {9, 10},  {11, 12},
    {11, 15}, {12, 13}, {15, 13}, {15, 14}, {14, 12}, {14, 13}, {14, 13},
}};

void invariant(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::InvalidArgument, "family invariant violated: " + what);
}

}  // namespace

std::size_t familyOrder(int m) { return 18 * (std::size_t{1} << (m - 1)) - 2; }

std::size_t familyBranchCount(int m) { return 3 * (std::size_t{1} << (m - 1)); }

FamilyLevel buildG1() {
  FamilyLevel level;
  level.m = 1;
  level.graph = Graph::fromPairs(16, kG1Edges);
  level.junctions = {0};
  level.branches = {Branch{1, 2, 3, 4, 5}, Branch{6, 7, 8, 10, 9}, Branch{11, 12, 13, 14, 15}};
  checkFamilyLevel(level);
  return level;
}

FamilyLevel expandOnce(const FamilyLevel& level) {
  checkFamilyLevel(level);
  const std::size_t n = level.order();
  std::vector<Edge> edges;
  std::vector<char> dropped(level.graph.size(), 0);
  for (const Branch& b : level.branches) {
    for (auto [i, j] : kBranchPattern) {
      // Only the two edges from the attachment vertex survive the rewrite.
      if (i == 0 && (j == 1 || j == 4)) continue;
      dropped[level.graph.edgeIndex(Edge(b[i], b[j]))] = 1;
    }
  }
  for (std::size_t e = 0; e < level.graph.size(); ++e) {
    if (!dropped[e]) edges.push_back(level.graph.edges()[e]);
  }

  FamilyLevel next;
  next.m = level.m + 1;
  next.junctions = level.junctions;
  VertexId fresh = static_cast<VertexId>(n);
  for (const Branch& b : level.branches) {
    const VertexId top = b[0];
    const VertexId left = b[1];
    const VertexId right = b[4];
    // v1..v8; v1 and v2 take over the labels of the deleted vertices.
    const std::array<VertexId, 8> v{b[2], b[3], fresh, fresh + 1, fresh + 2, fresh + 3, fresh + 4, fresh + 5};
    fresh += 6;
    const std::array<std::pair<VertexId, VertexId>, 14> gadget{{
        {left, v[0]}, {left, v[3]}, {v[0], v[1]}, {v[0], v[2]}, {v[1], v[3]}, {v[1], v[2]}, {v[2], v[3]},
        {right, v[4]}, {right, v[6]}, {v[4], v[5]}, {v[4], v[7]}, {v[5], v[7]}, {v[5], v[6]}, {v[6], v[7]},
    }};
    for (auto [a, c] : gadget) edges.emplace_back(a, c);
    next.junctions.push_back(top);
    next.branches.push_back(Branch{left, v[0], v[1], v[2], v[3]});
    next.branches.push_back(Branch{right, v[4], v[5], v[7], v[6]});
  }
  std::sort(next.junctions.begin(), next.junctions.end());
  next.graph = Graph::fromEdges(fresh, edges);
  checkFamilyLevel(next);
  return next;
}

FamilyLevel buildGm(int m) {
  if (m < 1 || m > kMaxFamilyLevel) {
    fail(ErrorCode::InvalidArgument, "buildGm: m=" + std::to_string(m) + " outside [1, " +
                                         std::to_string(kMaxFamilyLevel) + "]");
  }
  FamilyLevel level = buildG1();
  while (level.m < m) level = expandOnce(level);
  return level;
}

void checkFamilyLevel(const FamilyLevel& level) {
  const Graph& g = level.graph;
  invariant(level.order() == familyOrder(level.m), "order != 18*2^(m-1)-2");
  invariant(level.branchCount() == familyBranchCount(level.m), "branch count != 3*2^(m-1)");
  invariant((level.order() + 2) == 6 * level.branchCount(), "(n+2)/6 != branch count");
  const Validation v = validate(g);
  invariant(v.connected && v.cubic, "graph must be cubic and connected");

  std::vector<char> owned(g.order(), 0);
  std::vector<char> attachment(g.order(), 0);
  for (const Branch& b : level.branches) {
    for (VertexId x : b) {
      invariant(x < g.order() && !owned[x], "branches must be disjoint vertex sets");
      owned[x] = 1;
    }
    // Induced subgraph is exactly the 7-edge pattern under the stored role order.
    std::size_t inside = 0;
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) {
        const bool expected = std::find(kBranchPattern.begin(), kBranchPattern.end(), std::pair{i, j}) !=
                              kBranchPattern.end();
        invariant(g.hasEdge(b[i], b[j]) == expected, "branch does not match the 5-vertex pattern");
        inside += expected ? 1 : 0;
      }
    }
    invariant(inside == 7, "branch edge count");
    attachment[b[0]] = 1;
  }
  for (VertexId j : level.junctions) {
    invariant(j < g.order() && !owned[j], "junction inside a branch");
    owned[j] = 1;
  }
  invariant(std::all_of(owned.begin(), owned.end(), [](char c) { return c != 0; }),
            "every vertex is a junction or in a branch");

  const auto structure = blockCutDecomposition(g);
  invariant(structure.pendantBlockCount == level.branchCount(), "pendant blocks != branches");
  for (const Branch& b : level.branches) {
    std::size_t outside = 0;
    for (VertexId w : g.neighbors(b[0])) {
      if (std::find(b.begin(), b.end(), w) != b.end()) continue;
      ++outside;
      invariant(std::binary_search(structure.bridges.begin(), structure.bridges.end(), Edge(b[0], w)),
                "branch attachment edge is not a bridge");
    }
    invariant(outside == 1, "branch attaches by more than one edge");
  }
  for (const Edge& e : g.edges()) {
    invariant(!(attachment[e.u] && attachment[e.v]), "two branch attachment vertices are adjacent");
  }
}

std::string familySidecarJson(const FamilyLevel& level) {
  nlohmann::ordered_json j;
  j["m"] = level.m;
  j["order"] = level.order();
  j["branchCount"] = level.branchCount();
  nlohmann::ordered_json bridges = nlohmann::ordered_json::array();
  for (const Edge& e : findBridges(level.graph)) bridges.push_back({e.u, e.v});
  j["bridges"] = bridges;
  return j.dump();
}

}  // namespace leafspan
