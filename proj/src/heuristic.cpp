#include "leafspan/heuristic.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <random>

#include "leafspan/error.hpp"

namespace leafspan {

SpanningTree buildInitialTree(const Graph& g, VertexId root, InitialStrategy strategy, std::uint64_t seed) {
  const std::size_t n = g.order();
  if (root >= n) fail(ErrorCode::InvalidArgument, "buildInitialTree: root " + std::to_string(root) + " out of range");
  requireConnected(g, "buildInitialTree");

  std::vector<char> seen(n, 0);
  std::vector<Edge> edges;
  edges.reserve(n == 0 ? 0 : n - 1);
  seen[root] = 1;

  if (strategy == InitialStrategy::Bfs) {
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (VertexId w : g.neighbors(v)) {
        if (seen[w]) continue;
        seen[w] = 1;
        edges.emplace_back(v, w);
        queue.push_back(w);
      }
    }
    return SpanningTree::fromEdges(g, std::move(edges));
  }

  std::mt19937_64 rng(seed);
  std::vector<std::vector<VertexId>> order(n);
  for (VertexId v = 0; v < n; ++v) {
    order[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    if (strategy == InitialStrategy::Randomized) std::shuffle(order[v].begin(), order[v].end(), rng);
  }
  std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next == order[v].size()) {
      stack.pop_back();
      continue;
    }
    VertexId w = order[v][next++];
    if (seen[w]) continue;
    seen[w] = 1;
    edges.emplace_back(v, w);
    stack.emplace_back(w, 0);
  }
  return SpanningTree::fromEdges(g, std::move(edges));
}

std::size_t leafCountAfterSwap(const SpanningTree& t, Edge add, Edge remove) {
  std::array<VertexId, 4> touched{add.u, add.v, remove.u, remove.v};
  std::sort(touched.begin(), touched.end());
  const auto end = std::unique(touched.begin(), touched.end());
  long count = static_cast<long>(t.leafCount());
  for (auto it = touched.begin(); it != end; ++it) {
    const VertexId x = *it;
    const long before = t.degree(x);
    const long after = before + (add.touches(x) ? 1 : 0) - (remove.touches(x) ? 1 : 0);
    count += (after == 1 ? 1 : 0) - (before == 1 ? 1 : 0);
  }
  return static_cast<std::size_t>(count);
}

namespace {

// One pass over (add, remove) pairs in lexicographic order. Returns the chosen
// improving swap, if any.
std::optional<std::pair<Edge, Edge>> findImprovingSwap(const SpanningTree& t, bool firstImprovement) {
  const std::size_t current = t.leafCount();
  std::optional<std::pair<Edge, Edge>> best;
  std::size_t bestCount = current;
  for (const Edge& add : t.host().edges()) {
    if (t.contains(add)) continue;
    const auto cycle = fundamentalCycle(t, add);
    std::vector<Edge> removable;
    removable.reserve(cycle.size());
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) removable.emplace_back(cycle[i], cycle[i + 1]);
    std::sort(removable.begin(), removable.end());
    for (const Edge& remove : removable) {
      const std::size_t count = leafCountAfterSwap(t, add, remove);
      if (count < bestCount) {
        bestCount = count;
        best.emplace(add, remove);
        if (firstImprovement) return best;
      }
    }
  }
  return best;
}

}  // namespace

SpanningTree reduceLeaves(const Graph& g, SpanningTree t, const SearchPolicy& policy) {
  if (&t.host() != &g && !(t.host() == g)) fail(ErrorCode::InvalidArgument, "reduceLeaves: tree belongs to another graph");
  for (std::size_t pass = 0; pass < policy.maxPasses; ++pass) {
    const std::size_t k = t.leafCount();
    if (k <= 2) break;
    if (auto moved = adjacentLeafMove(t); moved && moved->leafCount() < k) {
      t = std::move(*moved);
      continue;
    }
    if (!policy.useSwaps) break;
    auto swap = findImprovingSwap(t, policy.acceptFirstImprovement);
    if (!swap) break;
    t = swapUnchecked(t, swap->first, swap->second);
  }
  return t;
}

SpanningTree bestHeuristicTree(const Graph& g, const SearchPolicy& policy, std::size_t target) {
  const std::size_t n = g.order();
  requireConnected(g, "bestHeuristicTree");
  if (n == 0) fail(ErrorCode::InvalidArgument, "bestHeuristicTree: empty graph");

  std::vector<VertexId> roots;
  if (n <= 64) {
    for (VertexId v = 0; v < n; ++v) roots.push_back(v);
  } else {
    std::mt19937_64 rng(policy.seed);
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
    for (std::size_t i = 0; i < std::max<std::size_t>(1, policy.restarts); ++i) roots.push_back(pick(rng));
  }

  std::optional<SpanningTree> best;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    auto start = buildInitialTree(g, roots[i], policy.initial, policy.seed + i);
    auto tree = reduceLeaves(g, std::move(start), policy);
    if (!best || tree.leafCount() < best->leafCount()) best = std::move(tree);
    if (best->leafCount() <= target) break;
  }
  return std::move(*best);
}

}  // namespace leafspan
