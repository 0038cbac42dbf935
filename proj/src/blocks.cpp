#include "leafspan/blocks.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "leafspan/error.hpp"

namespace leafspan {
namespace {

constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();

struct LowLink {
  std::vector<std::size_t> discovery;
  std::vector<std::size_t> low;
  std::vector<Edge> bridges;
  std::vector<char> articulation;
};

// Iterative Tarjan low-link over every component.
LowLink lowLink(const Graph& g) {
  const std::size_t n = g.order();
  LowLink out;
  out.discovery.assign(n, kUnseen);
  out.low.assign(n, 0);
  out.articulation.assign(n, 0);
  std::size_t clock = 0;

  struct Frame {
    VertexId v;
    VertexId parent;
    std::size_t next;
    std::size_t children;
  };
  std::vector<Frame> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (out.discovery[root] != kUnseen) continue;
    out.discovery[root] = out.low[root] = clock++;
    stack.push_back({root, root, 0, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        VertexId w = nbrs[f.next++];
        if (out.discovery[w] == kUnseen) {
          out.discovery[w] = out.low[w] = clock++;
          ++f.children;
          stack.push_back({w, f.v, 0, 0});
        } else if (w != f.parent) {
          out.low[f.v] = std::min(out.low[f.v], out.discovery[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children > 1) out.articulation[done.v] = 1;
        continue;
      }
      Frame& up = stack.back();
      out.low[up.v] = std::min(out.low[up.v], out.low[done.v]);
      if (out.low[done.v] > out.discovery[up.v]) out.bridges.emplace_back(up.v, done.v);
      // The DFS root is handled by its child count when it is popped.
      if (stack.size() > 1 && out.low[done.v] >= out.discovery[up.v]) out.articulation[up.v] = 1;
    }
  }
  std::sort(out.bridges.begin(), out.bridges.end());
  return out;
}

// Number of internally vertex-disjoint s-t paths, stopping once `cap` is reached.
std::size_t localConnectivity(const Graph& g, VertexId s, VertexId t, std::size_t cap) {
  // Split every vertex v into v_in = 2v and v_out = 2v+1 with unit capacity.
  const std::size_t n = g.order();
  const std::size_t nodes = 2 * n;
  struct Arc {
    std::size_t to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<std::size_t>> out(nodes);
  auto addArc = [&](std::size_t a, std::size_t b, int c) {
    out[a].push_back(arcs.size());
    arcs.push_back({b, c});
    out[b].push_back(arcs.size());
    arcs.push_back({a, 0});
  };
  const int big = static_cast<int>(n) + 1;
  for (VertexId v = 0; v < n; ++v) addArc(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
  for (const Edge& e : g.edges()) {
    addArc(2 * e.u + 1, 2 * e.v, 1);
    addArc(2 * e.v + 1, 2 * e.u, 1);
  }
  const std::size_t source = 2 * s + 1;
  const std::size_t sink = 2 * t;
  std::size_t flow = 0;
  std::vector<std::size_t> via(nodes);
  while (flow < cap) {
    std::fill(via.begin(), via.end(), kUnseen);
    std::deque<std::size_t> queue{source};
    via[source] = arcs.size();
    while (!queue.empty() && via[sink] == kUnseen) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t a : out[x]) {
        if (arcs[a].cap > 0 && via[arcs[a].to] == kUnseen) {
          via[arcs[a].to] = a;
          queue.push_back(arcs[a].to);
        }
      }
    }
    if (via[sink] == kUnseen) break;
    for (std::size_t x = sink; x != source;) {
      std::size_t a = via[x];
      arcs[a].cap -= 1;
      arcs[a ^ 1].cap += 1;
      x = arcs[a ^ 1].to;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

std::vector<Edge> findBridges(const Graph& g) { return lowLink(g).bridges; }

std::size_t vertexConnectivity(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return 0;
  if (!isConnected(g)) return 0;
  std::size_t best = n - 1;
  // Even's scheme: some vertex among the first best+1 lies outside a minimum cut.
  for (VertexId i = 0; i < n && i <= best; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (g.hasEdge(i, j)) continue;
      best = std::min(best, localConnectivity(g, i, j, best));
    }
  }
  return best;
}

BlockCutStructure blockCutDecomposition(const Graph& g) {
  requireConnected(g, "blockCutDecomposition");
  const std::size_t n = g.order();
  LowLink ll = lowLink(g);
  BlockCutStructure out;
  out.bridges = ll.bridges;
  for (VertexId v = 0; v < n; ++v) {
    if (ll.articulation[v]) out.articulationPoints.push_back(v);
  }

  // Components of G minus its bridges.
  out.componentOf.assign(n, kUnseen);
  for (VertexId root = 0; root < n; ++root) {
    if (out.componentOf[root] != kUnseen) continue;
    const std::size_t id = out.components.size();
    out.components.emplace_back();
    std::vector<VertexId> stack{root};
    out.componentOf[root] = id;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      out.components[id].push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (out.componentOf[w] != kUnseen) continue;
        if (std::binary_search(out.bridges.begin(), out.bridges.end(), Edge(v, w))) continue;
        out.componentOf[w] = id;
        stack.push_back(w);
      }
    }
    std::sort(out.components[id].begin(), out.components[id].end());
  }

  std::vector<std::size_t> treeDegree(out.components.size(), 0);
  for (const Edge& b : out.bridges) {
    ++treeDegree[out.componentOf[b.u]];
    ++treeDegree[out.componentOf[b.v]];
  }
  out.pendantBlockCount = static_cast<std::size_t>(std::count(treeDegree.begin(), treeDegree.end(), 1));
  out.vertexConnectivity = vertexConnectivity(g);
  return out;
}

}  // namespace leafspan
