#include "leafspan/exact_solver.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

#include "leafspan/bounds.hpp"
#include "leafspan/error.hpp"
#include "leafspan/graph6.hpp"
#include "leafspan/heuristic.hpp"

namespace leafspan {
namespace {

enum : char { kUndecided = 0, kIn = 1, kOut = 2 };

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct SearchState {
  std::vector<char> inTree;
  std::vector<std::uint32_t> treeDegree;
  std::vector<std::uint32_t> open;  // undecided incident edges per vertex
  std::vector<char> edgeState;
  std::size_t treeSize = 0;
  std::size_t excess = 0;  // sum of max(0, deg - 2) over tree vertices
};

class TreeSearch {
 public:
  TreeSearch(const Graph& g, std::size_t k, BudgetMeter& meter) : g_(g), k_(k), meter_(meter) {
    incident_.resize(g.order());
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      incident_[edges[i].u].emplace_back(edges[i].v, i);
      incident_[edges[i].v].emplace_back(edges[i].u, i);
    }
    for (auto& row : incident_) std::sort(row.begin(), row.end());
  }

  SearchVerdict run() {
    const std::size_t n = g_.order();
    SearchState s;
    s.inTree.assign(n, 0);
    s.treeDegree.assign(n, 0);
    s.open.assign(n, 0);
    s.edgeState.assign(g_.size(), kUndecided);
    for (VertexId v = 0; v < n; ++v) s.open[v] = static_cast<std::uint32_t>(g_.degree(v));
    s.inTree[0] = 1;
    s.treeSize = 1;
    return recurse(std::move(s));
  }

  std::vector<Edge> solution;

 private:
  void include(SearchState& s, std::size_t edge, VertexId joining) const {
    const Edge e = g_.edges()[edge];
    const VertexId anchor = e.other(joining);
    s.edgeState[edge] = kIn;
    --s.open[e.u];
    --s.open[e.v];
    if (++s.treeDegree[anchor] > 2) ++s.excess;
    ++s.treeDegree[joining];
    s.inTree[joining] = 1;
    ++s.treeSize;
    // Remaining edges from the new vertex back into the tree would close cycles.
    for (auto [x, f] : incident_[joining]) {
      if (s.edgeState[f] == kUndecided && s.inTree[x]) exclude(s, f);
    }
  }

  void exclude(SearchState& s, std::size_t edge) const {
    const Edge e = g_.edges()[edge];
    s.edgeState[edge] = kOut;
    --s.open[e.u];
    --s.open[e.v];
  }

  // Attaches every outside vertex that has a single remaining edge into the
  // tree. Returns false when some outside vertex has no edge left.
  bool propagate(SearchState& s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (VertexId x = 0; x < g_.order(); ++x) {
        if (s.inTree[x]) continue;
        if (s.open[x] == 0) return false;
        if (s.open[x] != 1) continue;
        for (auto [y, f] : incident_[x]) {
          if (s.edgeState[f] != kUndecided) continue;
          if (s.inTree[y]) {
            include(s, f, x);
            changed = true;
          }
          break;
        }
      }
    }
    return true;
  }

  // Pendant blocks of the graph formed by in-tree and undecided edges, or
  // kNone when that graph is disconnected.
  std::size_t availablePendantBlocks(const SearchState& s) const {
    const std::size_t n = g_.order();
    std::vector<std::size_t> disc(n, kNone);
    std::vector<std::size_t> low(n, 0);
    std::vector<char> bridge(g_.size(), 0);
    struct Frame {
      VertexId v;
      std::size_t parentEdge;
      std::size_t next;
    };
    std::vector<Frame> stack{{0, kNone, 0}};
    std::size_t clock = 0;
    disc[0] = low[0] = clock++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < incident_[f.v].size()) {
        auto [w, e] = incident_[f.v][f.next++];
        if (s.edgeState[e] == kOut || e == f.parentEdge) continue;
        if (disc[w] == kNone) {
          disc[w] = low[w] = clock++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      const VertexId up = stack.back().v;
      low[up] = std::min(low[up], low[done.v]);
      if (low[done.v] > disc[up]) bridge[done.parentEdge] = 1;
    }
    if (clock < n) return kNone;

    std::vector<std::size_t> component(n, kNone);
    std::size_t components = 0;
    for (VertexId root = 0; root < n; ++root) {
      if (component[root] != kNone) continue;
      std::vector<VertexId> todo{root};
      component[root] = components;
      while (!todo.empty()) {
        VertexId v = todo.back();
        todo.pop_back();
        for (auto [w, e] : incident_[v]) {
          if (s.edgeState[e] == kOut || bridge[e] || component[w] != kNone) continue;
          component[w] = components;
          todo.push_back(w);
        }
      }
      ++components;
    }
    std::vector<std::size_t> degree(components, 0);
    for (std::size_t e = 0; e < g_.size(); ++e) {
      if (!bridge[e]) continue;
      ++degree[component[g_.edges()[e].u]];
      ++degree[component[g_.edges()[e].v]];
    }
    return static_cast<std::size_t>(std::count(degree.begin(), degree.end(), 1));
  }

  bool pruned(const SearchState& s) const {
    if (s.excess + 2 > k_) return true;
    std::size_t forcedLeaves = 0;
    for (VertexId v = 0; v < g_.order(); ++v) {
      if (s.inTree[v] ? (s.treeDegree[v] == 1 && s.open[v] == 0) : s.open[v] == 1) ++forcedLeaves;
    }
    if (forcedLeaves > k_) return true;
    const std::size_t pendant = availablePendantBlocks(s);
    return pendant == kNone || std::max<std::size_t>(2, pendant) > k_;
  }

  SearchVerdict recurse(SearchState s) {
    if (meter_.tick() != BudgetState::Ok) return SearchVerdict::BudgetExceeded;
    if (!propagate(s)) return SearchVerdict::Absent;
    if (s.excess + 2 > k_) return SearchVerdict::Absent;
    if (s.treeSize == g_.order()) {
      solution.clear();
      for (std::size_t e = 0; e < g_.size(); ++e) {
        if (s.edgeState[e] == kIn) solution.push_back(g_.edges()[e]);
      }
      return SearchVerdict::Found;
    }
    if (pruned(s)) return SearchVerdict::Absent;

    // Fail-first: the frontier vertex with the fewest undecided edges.
    VertexId anchor = 0;
    std::uint32_t fewest = std::numeric_limits<std::uint32_t>::max();
    for (VertexId v = 0; v < g_.order(); ++v) {
      if (s.inTree[v] && s.open[v] > 0 && s.open[v] < fewest) {
        fewest = s.open[v];
        anchor = v;
      }
    }
    std::size_t edge = kNone;
    VertexId joining = 0;
    for (auto [w, e] : incident_[anchor]) {
      if (s.edgeState[e] == kUndecided) {
        edge = e;
        joining = w;
        break;
      }
    }

    {
      SearchState with = s;
      include(with, edge, joining);
      const SearchVerdict v = recurse(std::move(with));
      if (v != SearchVerdict::Absent) return v;
    }
    exclude(s, edge);
    return recurse(std::move(s));
  }

  const Graph& g_;
  std::size_t k_;
  BudgetMeter& meter_;
  std::vector<std::vector<std::pair<VertexId, std::size_t>>> incident_;
};

TreeSearchResult searchTree(const Graph& g, std::size_t k, BudgetMeter& meter) {
  TreeSearchResult out;
  const std::uint64_t before = meter.nodes();
  if (g.order() <= 1) {
    out.verdict = SearchVerdict::Found;
    out.tree = SpanningTree::fromEdges(g, {});
    return out;
  }
  TreeSearch search(g, k, meter);
  out.verdict = search.run();
  if (out.verdict == SearchVerdict::Found) out.tree = SpanningTree::fromEdges(g, search.solution);
  out.nodes = meter.nodes() - before;
  return out;
}

PathSearchResult searchPath(const Graph& g, BudgetMeter& meter) {
  const std::size_t n = g.order();
  if (n > kMaxHamiltonianDpOrder) {
    fail(ErrorCode::BudgetExceeded, "hamiltonianPathDP: n=" + std::to_string(n) + " exceeds " +
                                        std::to_string(kMaxHamiltonianDpOrder));
  }
  PathSearchResult out;
  if (n == 0) return out;
  if (n == 1) {
    out.verdict = SearchVerdict::Found;
    out.path = {0};
    return out;
  }
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  // ends[mask]: bitmask of vertices v such that some path covers exactly mask and ends at v.
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  for (VertexId v = 0; v < n; ++v) ends[std::uint32_t{1} << v] = std::uint32_t{1} << v;
  bool reached = false;
  for (std::uint32_t mask = 1; mask < full && !reached; ++mask) {
    if ((mask & 0xFFFF) == 0) {
      out.nodes = mask;
      meter.poll();
      if (meter.state() != BudgetState::Ok) {
        out.verdict = SearchVerdict::BudgetExceeded;
        return out;
      }
    }
    for (std::uint32_t endSet = ends[mask]; endSet != 0; endSet &= endSet - 1) {
      const auto v = static_cast<VertexId>(std::countr_zero(endSet));
      for (std::uint32_t next = static_cast<std::uint32_t>(g.mask(v)) & ~mask; next != 0; next &= next - 1) {
        const std::uint32_t bit = next & (~next + 1);
        ends[mask | bit] |= bit;
        if ((mask | bit) == full) reached = true;
      }
    }
  }
  out.nodes = full;
  if (ends[full] == 0) return out;

  std::uint32_t mask = full;
  auto v = static_cast<VertexId>(std::countr_zero(ends[full]));
  while (true) {
    out.path.push_back(v);
    const std::uint32_t rest = mask & ~(std::uint32_t{1} << v);
    if (rest == 0) break;
    const std::uint32_t candidates = ends[rest] & static_cast<std::uint32_t>(g.mask(v));
    v = static_cast<VertexId>(std::countr_zero(candidates));
    mask = rest;
  }
  std::reverse(out.path.begin(), out.path.end());
  out.verdict = SearchVerdict::Found;
  return out;
}

SpanningTree pathTree(const Graph& g, const std::vector<VertexId>& path) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) edges.emplace_back(path[i], path[i + 1]);
  return SpanningTree::fromEdges(g, std::move(edges));
}

}  // namespace

TreeSearchResult hasTreeAtMostKLeaves(const Graph& g, std::size_t k, Budget budget) {
  requireConnected(g, "hasTreeAtMostKLeaves");
  if (k < 2) fail(ErrorCode::InvalidArgument, "hasTreeAtMostKLeaves: k must be >= 2");
  BudgetMeter meter(budget);
  return searchTree(g, k, meter);
}

PathSearchResult hamiltonianPathDP(const Graph& g, Budget budget) {
  requireConnected(g, "hamiltonianPathDP");
  BudgetMeter meter(budget);
  return searchPath(g, meter);
}

std::string_view statusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::Exact:
      return "exact";
    case SolveStatus::HeuristicOnly:
      return "heuristicOnly";
    case SolveStatus::Timeout:
      return "timeout";
  }
  return "unknown";
}

SolveOutcome minLeafSpanningTree(const Graph& g, Budget budget) {
  requireConnected(g, "minLeafSpanningTree");
  if (g.order() == 0) fail(ErrorCode::InvalidArgument, "minLeafSpanningTree: empty graph");
  BudgetMeter meter(budget);
  const std::size_t n = g.order();

  const std::size_t lowerBound = leafBlockLowerBound(g);
  SpanningTree best = bestHeuristicTree(g, SearchPolicy{}, lowerBound);
  std::size_t proven = lowerBound;
  SolveStatus status = SolveStatus::Exact;

  for (std::size_t k = lowerBound; k < best.leafCount(); ++k) {
    SearchVerdict verdict;
    std::optional<SpanningTree> found;
    if (k == 2 && n <= kMaxHamiltonianDpOrder) {
      auto path = searchPath(g, meter);
      verdict = path.verdict;
      if (verdict == SearchVerdict::Found) found = pathTree(g, path.path);
    } else {
      auto tree = searchTree(g, k, meter);
      verdict = tree.verdict;
      found = std::move(tree.tree);
    }
    if (verdict == SearchVerdict::Found) {
      best = std::move(*found);
      break;
    }
    if (verdict == SearchVerdict::BudgetExceeded) {
      status = meter.state() == BudgetState::TimeExpired ? SolveStatus::Timeout : SolveStatus::HeuristicOnly;
      break;
    }
    proven = k + 1;
  }
  if (status == SolveStatus::Exact) proven = best.leafCount();

  return SolveOutcome{best.leafCount(), std::move(best), lowerBound, proven, status, meter.nodes(), meter.elapsed()};
}

std::string formatWitness(const SolveOutcome& outcome) {
  std::ostringstream out;
  out << formatTree(outcome.witness);
  out << "minLeaves=" << outcome.minLeaves << " status=" << statusName(outcome.status)
      << " lb=" << outcome.lowerBoundUsed << '\n';
  return out.str();
}

ParsedWitness parseWitness(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (!line.empty()) lines.push_back(line);
    }
  }
  if (lines.empty()) fail(ErrorCode::Parse, "witness: empty file");
  ParsedWitness out{parseGraph6(lines[0]), {}, std::nullopt, {}, std::nullopt};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.starts_with("minLeaves=")) {
      std::istringstream trailer(line);
      std::string field;
      while (trailer >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) fail(ErrorCode::Parse, "witness: malformed trailer field \"" + field + "\"");
        const std::string key = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        try {
          if (key == "minLeaves") out.minLeaves = std::stoul(value);
          if (key == "lb") out.lowerBound = std::stoul(value);
        } catch (const std::exception&) {
          fail(ErrorCode::Parse, "witness: non-numeric trailer value \"" + field + "\"");
        }
        if (key == "status") out.status = value;
      }
      continue;
    }
    std::istringstream row(line);
    long long a = -1;
    long long b = -1;
    std::string extra;
    if (!(row >> a >> b) || (row >> extra) || a < 0 || b < 0) fail(ErrorCode::Parse, "witness: malformed edge \"" + line + "\"");
    if (static_cast<std::size_t>(a) >= out.graph.order() || static_cast<std::size_t>(b) >= out.graph.order()) {
      fail(ErrorCode::InvalidArgument, "witness: endpoint out of range in \"" + line + "\"");
    }
    out.edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
  }
  return out;
}

}  // namespace leafspan
