#include "leafspan/bounds.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include <json.hpp>

#include "leafspan/blocks.hpp"
#include "leafspan/error.hpp"
#include "leafspan/graph6.hpp"

namespace leafspan {

std::optional<int> theoremBound(std::size_t n) {
  if (n < 8) return std::nullopt;
  return static_cast<int>((2 * n + 4) / 9);
}

int conjectureBound(std::size_t n) { return static_cast<int>((n + 2) / 6); }

std::size_t leafBlockLowerBound(const Graph& g) {
  if (g.order() <= 1) {
    requireConnected(g, "leafBlockLowerBound");
    return 0;
  }
  const auto structure = blockCutDecomposition(g);
  return std::max<std::size_t>(2, structure.pendantBlockCount);
}

int sigmaK(const Graph& g, int k, std::uint64_t nodeBudget) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "sigmaK: k must be >= 1");
  const std::size_t n = g.order();
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return g.degree(a) < g.degree(b); });

  long best = kNoIndependentSet;
  std::uint64_t nodes = 0;
  std::vector<VertexId> chosen;
  // Vertices are tried in nondecreasing degree, so the next candidate's degree
  // bounds every remaining pick from below.
  auto recurse = [&](auto&& self, std::size_t from, long sum) -> void {
    if (++nodes > nodeBudget) fail(ErrorCode::BudgetExceeded, "sigmaK: node budget exhausted");
    const int remaining = k - static_cast<int>(chosen.size());
    if (remaining == 0) {
      best = std::min(best, sum);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      const VertexId v = order[i];
      if (sum + static_cast<long>(remaining) * static_cast<long>(g.degree(v)) >= best) return;
      bool independent = true;
      for (VertexId c : chosen) {
        if (g.hasEdge(c, v)) {
          independent = false;
          break;
        }
      }
      if (!independent) continue;
      chosen.push_back(v);
      self(self, i + 1, sum + static_cast<long>(g.degree(v)));
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, 0);
  return static_cast<int>(best);
}

int independenceNumber(const Graph& g, std::uint64_t nodeBudget) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  if (n > 64) fail(ErrorCode::BudgetExceeded, "independenceNumber: exact computation limited to n <= 64");
  int best = 0;
  std::uint64_t nodes = 0;
  auto recurse = [&](auto&& self, std::uint64_t candidates, int size) -> void {
    if (++nodes > nodeBudget) fail(ErrorCode::BudgetExceeded, "independenceNumber: node budget exhausted");
    if (candidates == 0) {
      best = std::max(best, size);
      return;
    }
    if (size + std::popcount(candidates) <= best) return;
    // Vertices of residual degree 0 or 1 can always be taken greedily.
    int pickDegree = -1;
    VertexId pick = 0;
    for (std::uint64_t rest = candidates; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<VertexId>(std::countr_zero(rest));
      const int d = std::popcount(g.mask(v) & candidates);
      if (d <= 1) {
        self(self, candidates & ~(g.mask(v) | (std::uint64_t{1} << v)), size + 1);
        return;
      }
      if (d > pickDegree) {
        pickDegree = d;
        pick = v;
      }
    }
    const std::uint64_t bit = std::uint64_t{1} << pick;
    self(self, candidates & ~(g.mask(pick) | bit), size + 1);
    self(self, candidates & ~bit, size);
  };
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  recurse(recurse, all, 0);
  return best;
}

ConditionReport sufficientKEnded(const Graph& g, std::uint64_t nodeBudget) {
  requireConnected(g, "sufficientKEnded");
  const int n = static_cast<int>(g.order());
  ConditionReport r;
  r.graphId = writeGraph6(g);
  r.sigma2 = sigmaK(g, 2, nodeBudget);
  r.alpha = independenceNumber(g, nodeBudget);
  r.connectivity = static_cast<int>(vertexConnectivity(g));

  const bool complete = r.sigma2 == kNoIndependentSet;
  r.oreTraceable = complete || r.sigma2 >= n - 1;
  // Smallest k >= 2 with sigma2 >= n - k + 1, clamped to at most n - 1.
  if (complete) {
    r.btKEnded = 2;
  } else {
    r.btKEnded = std::max(2, std::min(n - 1, n + 1 - r.sigma2));
  }
  // Smallest k >= 2 with alpha <= m + k - 1; needs a connected graph (m >= 1).
  if (r.connectivity >= 1) r.winKEnded = std::max(2, r.alpha - r.connectivity + 1);
  return r;
}

std::string toJsonLine(const ConditionReport& report) {
  nlohmann::ordered_json j;
  j["graph_id"] = report.graphId;
  j["sigma2"] = report.sigma2 == kNoIndependentSet ? nlohmann::ordered_json(nullptr)
                                                    : nlohmann::ordered_json(report.sigma2);
  j["alpha"] = report.alpha;
  j["connectivity"] = report.connectivity;
  j["ore_traceable"] = report.oreTraceable;
  j["bt_k_ended"] = report.btKEnded;
  j["win_k_ended"] = report.winKEnded ? nlohmann::ordered_json(*report.winKEnded) : nlohmann::ordered_json(nullptr);
  return j.dump();
}

Graph bondyChvatalClosure(const Graph& g, ClosureMode mode, std::uint64_t shuffleSeed) {
  const std::size_t n = g.order();
  const std::size_t threshold = mode == ClosureMode::HamiltonianPath ? (n == 0 ? 0 : n - 1) : n;
  std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
  std::vector<std::size_t> degree(n);
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : edges) adjacent[e.u][e.v] = adjacent[e.v][e.u] = 1;
  for (VertexId v = 0; v < n; ++v) degree[v] = g.degree(v);

  std::vector<Edge> pairs;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  std::mt19937_64 rng(shuffleSeed);
  bool changed = true;
  while (changed) {
    changed = false;
    if (shuffleSeed != 0) std::shuffle(pairs.begin(), pairs.end(), rng);
    for (const Edge& p : pairs) {
      if (adjacent[p.u][p.v] || degree[p.u] + degree[p.v] < threshold) continue;
      adjacent[p.u][p.v] = adjacent[p.v][p.u] = 1;
      ++degree[p.u];
      ++degree[p.v];
      edges.push_back(p);
      changed = true;
    }
  }
  return Graph::fromEdges(n, edges);
}

}  // namespace leafspan
