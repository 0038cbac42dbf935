#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {
namespace {

std::vector<std::vector<char>> matrix(const Graph& g) {
  std::vector<std::vector<char>> a(g.order(), std::vector<char>(g.order(), 0));
  for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

bool connectedWithout(const Graph& g, std::optional<Edge> skipEdge, std::optional<VertexId> skipVertex) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::size_t target = n;
  VertexId start = 0;
  if (skipVertex) {
    seen[*skipVertex] = 1;
    --target;
    start = *skipVertex == 0 ? 1 : 0;
  }
  if (target == 0) return true;
  std::vector<VertexId> stack{start};
  seen[start] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : g.neighbors(x)) {
      if (seen[y] || (skipEdge && Edge(x, y) == *skipEdge)) continue;
      seen[y] = 1;
      ++reached;
      stack.push_back(y);
    }
  }
  return reached == target;
}

}  // namespace

std::int64_t kirchhoffTreeCount(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return 1;
  // Reduced Laplacian: drop the last row and column.
  const std::size_t m = n - 1;
  std::vector<std::vector<__int128>> a(m, std::vector<__int128>(m, 0));
  for (std::size_t i = 0; i < m; ++i) a[i][i] = static_cast<__int128>(g.degree(static_cast<VertexId>(i)));
  for (const Edge& e : g.edges()) {
    if (e.v < m) {
      a[e.u][e.v] -= 1;
      a[e.v][e.u] -= 1;
    }
  }
  __int128 previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < m && a[swap][k] == 0) ++swap;
      if (swap == m) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
    }
    previous = a[k][k];
  }
  return static_cast<std::int64_t>(sign * a[m - 1][m - 1]);
}

bool connected(const Graph& g) { return g.order() == 0 || connectedWithout(g, std::nullopt, std::nullopt); }

BruteTrees bruteSpanningTrees(const Graph& g) {
  const std::size_t n = g.order();
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  if (m > 24) throw std::invalid_argument("bruteSpanningTrees: too many edges");
  BruteTrees out;
  out.minLeaves = n + 1;
  if (n <= 1) {
    out.minLeaves = 0;
    out.count = 1;
    out.optimalLeafSets.push_back({});
    return out;
  }
  for (std::uint32_t subset = 0; subset < (1u << m); ++subset) {
    if (static_cast<std::size_t>(__builtin_popcount(subset)) != n - 1) continue;
    std::vector<VertexId> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](VertexId x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<int> degree(n, 0);
    bool acyclic = true;
    for (std::size_t i = 0; i < m && acyclic; ++i) {
      if (!(subset >> i & 1)) continue;
      const VertexId a = find(edges[i].u);
      const VertexId b = find(edges[i].v);
      if (a == b) acyclic = false;
      parent[a] = b;
      ++degree[edges[i].u];
      ++degree[edges[i].v];
    }
    if (!acyclic) continue;
    ++out.count;
    std::vector<VertexId> leaves;
    for (VertexId v = 0; v < n; ++v) {
      if (degree[v] == 1) leaves.push_back(v);
    }
    if (leaves.size() < out.minLeaves) {
      out.minLeaves = leaves.size();
      out.optimalLeafSets.clear();
    }
    if (leaves.size() == out.minLeaves) out.optimalLeafSets.push_back(leaves);
  }
  return out;
}

bool hasHamiltonianPath(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return true;
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self, VertexId x, std::size_t depth) -> bool {
    if (depth == n) return true;
    for (VertexId y : g.neighbors(x)) {
      if (used[y]) continue;
      used[y] = 1;
      if (self(self, y, depth + 1)) return true;
      used[y] = 0;
    }
    return false;
  };
  for (VertexId s = 0; s < n; ++s) {
    used.assign(n, 0);
    used[s] = 1;
    if (extend(extend, s, 1)) return true;
  }
  return false;
}

int bruteIndependenceNumber(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 24) throw std::invalid_argument("bruteIndependenceNumber: n too large");
  const auto a = matrix(g);
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const int size = __builtin_popcount(s);
    if (size <= best) continue;
    bool independent = true;
    for (std::size_t i = 0; i < n && independent; ++i) {
      if (!(s >> i & 1)) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if ((s >> j & 1) && a[i][j]) {
          independent = false;
          break;
        }
      }
    }
    if (independent) best = size;
  }
  return best;
}

std::optional<int> bruteSigma2(const Graph& g) {
  std::optional<int> best;
  for (VertexId a = 0; a < g.order(); ++a) {
    for (VertexId b = a + 1; b < g.order(); ++b) {
      if (g.hasEdge(a, b)) continue;
      const int sum = static_cast<int>(g.degree(a) + g.degree(b));
      if (!best || sum < *best) best = sum;
    }
  }
  return best;
}

std::string bruteCanonicalString(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 8) throw std::invalid_argument("bruteCanonicalString: n too large");
  const auto a = matrix(g);
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s;
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) s.push_back(a[perm[i]][perm[j]] ? '1' : '0');
    }
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

std::vector<Edge> bruteBridges(const Graph& g) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (!connectedWithout(g, e, std::nullopt)) out.push_back(e);
  }
  return out;
}

std::vector<VertexId> bruteArticulationPoints(const Graph& g) {
  std::vector<VertexId> out;
  if (g.order() <= 2) return out;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (!connectedWithout(g, std::nullopt, v)) out.push_back(v);
  }
  return out;
}

std::size_t bruteVertexConnectivity(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1 || !connected(g)) return 0;
  if (n > 20) throw std::invalid_argument("bruteVertexConnectivity: n too large");
  std::size_t best = n - 1;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const std::size_t size = static_cast<std::size_t>(__builtin_popcount(s));
    if (size >= best || size + 2 > n) continue;
    // Keep the vertices outside s and test whether they stay connected.
    std::vector<Edge> kept;
    std::vector<VertexId> index(n, 0);
    VertexId next = 0;
    for (VertexId v = 0; v < n; ++v) {
      if (!(s >> v & 1)) index[v] = next++;
    }
    for (const Edge& e : g.edges()) {
      if (!(s >> e.u & 1) && !(s >> e.v & 1)) kept.emplace_back(index[e.u], index[e.v]);
    }
    if (!connected(Graph::fromEdges(next, kept))) best = size;
  }
  return best;
}

std::size_t bruteSubcubicCount(std::size_t n) {
  if (n > 6) throw std::invalid_argument("bruteSubcubicCount: n too large");
  std::vector<Edge> all;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) all.emplace_back(a, b);
  }
  std::set<std::string> classes;
  for (std::uint32_t s = 0; s < (1u << all.size()); ++s) {
    std::vector<Edge> edges;
    std::vector<int> degree(n, 0);
    bool ok = true;
    for (std::size_t i = 0; i < all.size() && ok; ++i) {
      if (!(s >> i & 1)) continue;
      edges.push_back(all[i]);
      ok = ++degree[all[i].u] <= 3 && ++degree[all[i].v] <= 3;
    }
    if (!ok) continue;
    const Graph g = Graph::fromEdges(n, edges);
    if (connected(g)) classes.insert(bruteCanonicalString(g));
  }
  return classes.size();
}

Graph randomCubic(std::size_t n, std::mt19937_64& rng) {
  if (n < 4 || n % 2) throw std::invalid_argument("randomCubic: n must be even and >= 4");
  std::vector<VertexId> points(3 * n);
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<VertexId>(i / 3);
  for (;;) {
    std::shuffle(points.begin(), points.end(), rng);
    std::set<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      if (points[i] == points[i + 1]) simple = false;
      simple = simple && edges.emplace(points[i], points[i + 1]).second;
    }
    if (!simple) continue;
    const std::vector<Edge> list(edges.begin(), edges.end());
    Graph g = Graph::fromEdges(n, list);
    if (connected(g)) return g;
  }
}

Graph randomSubcubicTree(std::size_t n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::vector<int> degree(n, 0);
  for (VertexId v = 1; v < n; ++v) {
    std::vector<VertexId> open;
    for (VertexId u = 0; u < v; ++u) {
      if (degree[u] < 3) open.push_back(u);
    }
    const VertexId u = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
    edges.emplace_back(u, v);
    ++degree[u];
    ++degree[v];
  }
  return Graph::fromEdges(n, edges);
}

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<VertexId> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph::fromEdges(g.order(), edges);
}

}  // namespace oracle
