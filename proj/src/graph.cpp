#include "leafspan/graph.hpp"

#include <algorithm>
#include <sstream>

#include "leafspan/error.hpp"

namespace leafspan {

Graph Graph::fromEdges(std::size_t n, std::span<const Edge> edges, bool* duplicatesCollapsed) {
  if (n > kMaxOrder) {
    fail(ErrorCode::InvalidArgument, "graph order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  }
  Graph g;
  g.adjacency_.resize(n);
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.v >= n) {
      fail(ErrorCode::InvalidArgument,
           "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") has endpoint >= n=" + std::to_string(n));
    }
    if (e.u == e.v) {
      fail(ErrorCode::InvalidArgument, "loop at vertex " + std::to_string(e.u));
    }
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto last = std::unique(g.edges_.begin(), g.edges_.end());
  if (duplicatesCollapsed != nullptr) {
    *duplicatesCollapsed = last != g.edges_.end();
  }
  g.edges_.erase(last, g.edges_.end());
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& row : g.adjacency_) {
    std::sort(row.begin(), row.end());
  }
  if (n <= 64) {
    g.masks_.assign(n, 0);
    for (const Edge& e : g.edges_) {
      g.masks_[e.u] |= std::uint64_t{1} << e.v;
      g.masks_[e.v] |= std::uint64_t{1} << e.u;
    }
  }
  return g;
}

Graph Graph::fromPairs(std::size_t n, std::span<const std::pair<VertexId, VertexId>> pairs,
                       bool* duplicatesCollapsed) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    // Edge normalizes orientation, so check the raw endpoints first.
    if (a >= n || b >= n) {
      fail(ErrorCode::InvalidArgument,
           "pair (" + std::to_string(a) + "," + std::to_string(b) + ") has endpoint >= n=" + std::to_string(n));
    }
    edges.emplace_back(a, b);
  }
  return fromEdges(n, edges, duplicatesCollapsed);
}

bool Graph::hasEdge(VertexId a, VertexId b) const {
  if (a >= order() || b >= order()) return false;
  const auto& row = adjacency_[a];
  return std::binary_search(row.begin(), row.end(), b);
}

std::size_t Graph::edgeIndex(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return edges_.size();
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t Graph::minDegree() const {
  std::size_t best = order() == 0 ? 0 : adjacency_[0].size();
  for (const auto& row : adjacency_) best = std::min(best, row.size());
  return best;
}

std::size_t Graph::maxDegree() const {
  std::size_t best = 0;
  for (const auto& row : adjacency_) best = std::max(best, row.size());
  return best;
}

bool isConnected(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

void requireConnected(const Graph& g, const char* context) {
  if (!isConnected(g)) {
    fail(ErrorCode::Disconnected, std::string(context) + ": input graph is disconnected");
  }
}

Validation validate(const Graph& g) {
  Validation out;
  out.connected = isConnected(g);
  out.cubic = true;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3) {
      out.cubic = false;
      break;
    }
  }
  return out;
}

Graph relabel(const Graph& g, std::span<const VertexId> perm) {
  if (perm.size() != g.order()) fail(ErrorCode::InvalidArgument, "relabel: permutation size mismatch");
  std::vector<char> hit(perm.size(), 0);
  for (VertexId p : perm) {
    if (p >= perm.size() || hit[p]) fail(ErrorCode::InvalidArgument, "relabel: not a permutation");
    hit[p] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph::fromEdges(g.order(), edges);
}

Graph parseEdgeList(const std::string& text, bool* duplicatesCollapsed) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  if (lines.empty()) fail(ErrorCode::Parse, "edge list: missing header line \"n m\"");
  long long n = -1;
  long long m = -1;
  {
    std::istringstream header(lines[0]);
    if (!(header >> n >> m) || n < 0 || m < 0) fail(ErrorCode::Parse, "edge list: malformed header \"" + lines[0] + "\"");
  }
  if (static_cast<long long>(lines.size()) - 1 != m) {
    fail(ErrorCode::Parse, "edge list: header declares " + std::to_string(m) + " edges but " +
                               std::to_string(lines.size() - 1) + " follow");
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    long long a = -1;
    long long b = -1;
    if (!(row >> a >> b) || a < 0 || b < 0) fail(ErrorCode::Parse, "edge list: malformed edge \"" + lines[i] + "\"");
    if (a >= n || b >= n) {
      fail(ErrorCode::InvalidArgument, "edge list: endpoint out of range in \"" + lines[i] + "\"");
    }
    pairs.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
  }
  return Graph::fromPairs(static_cast<std::size_t>(n), pairs, duplicatesCollapsed);
}

std::string writeEdgeList(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace leafspan
