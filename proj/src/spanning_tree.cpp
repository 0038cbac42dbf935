#include "leafspan/spanning_tree.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "leafspan/error.hpp"
#include "leafspan/graph6.hpp"

namespace leafspan {
namespace {

// Union-find with undo, used by the enumerator.
class RollbackDsu {
 public:
  explicit RollbackDsu(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }

  void undo() {
    std::size_t b = history_.back();
    history_.pop_back();
    size_[parent_[b]] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> history_;
};

std::string edgeText(Edge e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

}  // namespace

SpanningTree SpanningTree::fromEdges(const Graph& host, std::vector<Edge> edges) {
  const std::size_t n = host.order();
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    fail(ErrorCode::InvalidArgument, "spanning tree: repeated edge");
  }
  if (n > 0 && edges.size() != n - 1) {
    fail(ErrorCode::InvalidArgument, "spanning tree: expected " + std::to_string(n - 1) + " edges, got " +
                                         std::to_string(edges.size()));
  }
  if (n == 0 && !edges.empty()) fail(ErrorCode::InvalidArgument, "spanning tree: edges on empty host");
  std::vector<std::uint32_t> degree(n, 0);
  RollbackDsu dsu(n);
  for (const Edge& e : edges) {
    if (!host.hasEdge(e.u, e.v)) fail(ErrorCode::InvalidArgument, "spanning tree: " + edgeText(e) + " is not a host edge");
    if (!dsu.unite(e.u, e.v)) fail(ErrorCode::InvalidArgument, "spanning tree: " + edgeText(e) + " closes a cycle");
    ++degree[e.u];
    ++degree[e.v];
  }
  // n-1 edges without a cycle on n vertices are necessarily connected.
  return SpanningTree(host, std::move(edges), std::move(degree));
}

bool SpanningTree::contains(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

std::size_t SpanningTree::leafCount() const {
  return static_cast<std::size_t>(std::count(degree_.begin(), degree_.end(), 1u));
}

std::vector<VertexId> SpanningTree::leaves() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < degree_.size(); ++v) {
    if (degree_[v] == 1) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<VertexId>> SpanningTree::adjacency() const {
  std::vector<std::vector<VertexId>> adj(degree_.size());
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

// Trusted swap: caller guarantees the result is a spanning tree.
SpanningTree swapUnchecked(const SpanningTree& t, Edge add, Edge remove) {
  std::vector<Edge> edges;
  edges.reserve(t.edges_.size());
  for (const Edge& e : t.edges_) {
    if (e != remove) edges.push_back(e);
  }
  edges.insert(std::upper_bound(edges.begin(), edges.end(), add), add);
  std::vector<std::uint32_t> degree = t.degree_;
  ++degree[add.u];
  ++degree[add.v];
  --degree[remove.u];
  --degree[remove.v];
  return SpanningTree(*t.host_, std::move(edges), std::move(degree));
}

LeafStats leafStats(const SpanningTree& t) {
  LeafStats s;
  std::size_t maxDegree = 0;
  for (VertexId v = 0; v < t.degrees().size(); ++v) {
    const std::size_t d = t.degree(v);
    maxDegree = std::max(maxDegree, d);
    switch (d) {
      case 0:
        break;
      case 1:
        ++s.k;
        s.leafSet.push_back(v);
        break;
      case 2:
        ++s.n1;
        break;
      case 3:
        ++s.p;
        break;
      default:
        ++s.higher;
    }
  }
  if (maxDegree <= 3 && t.degrees().size() >= 2 && s.k != s.p + 2) {
    throw std::logic_error("leafStats: subcubic tree with k=" + std::to_string(s.k) + ", p=" + std::to_string(s.p));
  }
  return s;
}

std::vector<VertexId> fundamentalCycle(const SpanningTree& t, Edge e) {
  const Graph& host = t.host();
  if (!host.hasEdge(e.u, e.v)) fail(ErrorCode::InvalidArgument, "fundamentalCycle: " + edgeText(e) + " is not a host edge");
  if (t.contains(e)) fail(ErrorCode::InvalidArgument, "fundamentalCycle: " + edgeText(e) + " is already a tree edge");

  const auto adj = t.adjacency();
  std::vector<VertexId> parent(host.order(), static_cast<VertexId>(host.order()));
  std::deque<VertexId> queue{e.u};
  parent[e.u] = e.u;
  while (!queue.empty() && parent[e.v] == host.order()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : adj[x]) {
      if (parent[y] == host.order()) {
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  std::vector<VertexId> path;
  for (VertexId x = e.v; x != e.u; x = parent[x]) path.push_back(x);
  path.push_back(e.u);
  std::reverse(path.begin(), path.end());
  return path;
}

SpanningTree edgeSwap(const SpanningTree& t, Edge add, Edge remove) {
  if (!t.contains(remove)) fail(ErrorCode::InvalidArgument, "edgeSwap: " + edgeText(remove) + " is not a tree edge");
  const auto cycle = fundamentalCycle(t, add);
  bool onCycle = false;
  for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
    if (Edge(cycle[i], cycle[i + 1]) == remove) onCycle = true;
  }
  if (!onCycle) {
    fail(ErrorCode::InvalidArgument,
         "edgeSwap: " + edgeText(remove) + " is not on the fundamental cycle of " + edgeText(add));
  }
  return swapUnchecked(t, add, remove);
}

std::optional<SpanningTree> adjacentLeafMove(const SpanningTree& t) {
  const std::size_t k = t.leafCount();
  if (k < 3) fail(ErrorCode::Precondition, "adjacentLeafMove: needs at least 3 leaves, tree has " + std::to_string(k));
  const Graph& host = t.host();
  const auto leaves = t.leaves();
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      const Edge add(leaves[i], leaves[j]);
      if (!host.hasEdge(add.u, add.v) || t.contains(add)) continue;

      const auto cycle = fundamentalCycle(t, add);
      // Leaf count after adding `add`: both endpoints stop being leaves.
      const long base = static_cast<long>(k) - 2;
      auto leafDelta = [&](VertexId x) {
        // Degree of x after the add, before the removal.
        std::uint32_t d = t.degree(x) + (add.touches(x) ? 1 : 0);
        return d == 2 ? 1 : 0;  // dropping to degree 1 creates a leaf
      };
      long bestCount = 0;
      Edge bestRemove;
      bool have = false;
      for (std::size_t c = 0; c + 1 < cycle.size(); ++c) {
        const long count = base + leafDelta(cycle[c]) + leafDelta(cycle[c + 1]);
        if (!have || count < bestCount) {
          have = true;
          bestCount = count;
          bestRemove = Edge(cycle[c], cycle[c + 1]);
        }
      }
      return swapUnchecked(t, add, bestRemove);
    }
  }
  return std::nullopt;
}

bool leavesIndependent(const SpanningTree& t) {
  const auto leaves = t.leaves();
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      if (t.host().hasEdge(leaves[i], leaves[j])) return false;
    }
  }
  return true;
}

TreeEnumeration enumerateSpanningTrees(const Graph& g, std::uint64_t cap,
                                       const std::function<void(const SpanningTree&)>& visit) {
  requireConnected(g, "enumerateSpanningTrees");
  const std::size_t n = g.order();
  const auto& edges = g.edges();
  TreeEnumeration result;
  if (n <= 1) {
    if (cap == 0) {
      result.truncated = true;
      return result;
    }
    visit(SpanningTree::fromEdges(g, {}));
    result.count = 1;
    return result;
  }

  RollbackDsu chosen(n);
  std::vector<Edge> picked;
  std::vector<char> excluded(edges.size(), 0);
  bool stop = false;

  // True when a and b stay connected through picked edges and undecided edges after `index`.
  auto stillConnected = [&](std::size_t index) {
    RollbackDsu probe(n);
    for (const Edge& e : picked) probe.unite(e.u, e.v);
    for (std::size_t j = index + 1; j < edges.size(); ++j) {
      if (!excluded[j]) probe.unite(edges[j].u, edges[j].v);
    }
    return probe.find(edges[index].u) == probe.find(edges[index].v);
  };

  std::function<void(std::size_t)> recurse = [&](std::size_t index) {
    if (stop) return;
    if (picked.size() == n - 1) {
      if (result.count == cap) {
        result.truncated = true;
        stop = true;
        return;
      }
      ++result.count;
      visit(SpanningTree::fromEdges(g, picked));
      return;
    }
    if (index == edges.size()) return;
    const Edge e = edges[index];
    if (chosen.find(e.u) != chosen.find(e.v)) {
      chosen.unite(e.u, e.v);
      picked.push_back(e);
      recurse(index + 1);
      picked.pop_back();
      chosen.undo();
    }
    if (stop) return;
    // Skipping e is only useful when e is not a bridge of what remains.
    if (stillConnected(index)) {
      excluded[index] = 1;
      recurse(index + 1);
      excluded[index] = 0;
    }
  };
  recurse(0);
  return result;
}

std::string formatTree(const SpanningTree& t) {
  std::ostringstream out;
  out << writeGraph6(t.host()) << '\n';
  for (const Edge& e : t.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace leafspan
