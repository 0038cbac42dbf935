#include "leafspan/cubic_enum.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include "leafspan/canonical.hpp"
#include "leafspan/error.hpp"
#include "leafspan/graph6.hpp"

namespace leafspan {
namespace {

using Masks = std::vector<std::uint64_t>;

inline constexpr std::size_t kMaxEnumerationOrder = 20;

// Decodes a canonical graph6 label back to adjacency masks.
Masks masksFromLabel(const std::string& label) {
  const Graph g = parseGraph6(label);
  Masks adj(g.order());
  for (VertexId v = 0; v < g.order(); ++v) adj[v] = g.mask(v);
  return adj;
}

CubicUniverse finish(std::size_t n, std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  CubicUniverse u;
  u.n = n;
  u.graphs.reserve(labels.size());
  for (const auto& label : labels) u.graphs.push_back(parseGraph6(label));
  u.labels = std::move(labels);
  return u;
}

// Backtracking over BFS labellings: vertices are completed in order, and each
// open slot of the current vertex goes either to a later, already introduced
// vertex or to the next unused label.
class BfsCubicGenerator {
 public:
  explicit BfsCubicGenerator(std::size_t n) : n_(n), adj_(n, 0), degree_(n, 0) {}

  // Completes vertices [from, n) and reports each finished labelled graph.
  void run(std::size_t from, const std::function<void(const Masks&)>& emit) { fill(from, emit); }

  // Snapshots of every partial state after vertices [0, depth) are complete.
  struct Snapshot {
    Masks adj;
    std::vector<int> degree;
    std::size_t introduced;
  };
  std::vector<Snapshot> prefixes(std::size_t depth) {
    std::vector<Snapshot> out;
    introduced_ = n_ == 0 ? 0 : 1;
    collect(0, depth, out);
    return out;
  }

  void load(const Snapshot& s) {
    adj_ = s.adj;
    degree_ = s.degree;
    introduced_ = s.introduced;
  }

 private:
  template <typename Leaf>
  void expand(std::size_t v, Leaf&& leaf) {
    if (v == n_) {
      if (introduced_ == n_) leaf();
      return;
    }
    if (v >= introduced_) return;  // v was never reached: disconnected
    const int need = 3 - degree_[v];
    std::vector<VertexId> candidates;
    for (std::size_t u = v + 1; u < introduced_; ++u) {
      if (degree_[u] < 3 && !((adj_[v] >> u) & 1)) candidates.push_back(static_cast<VertexId>(u));
    }
    // Choose `old` existing partners (increasing) and need-old fresh vertices.
    std::vector<VertexId> chosen;
    std::function<void(std::size_t)> pick = [&](std::size_t start) {
      const int fresh = need - static_cast<int>(chosen.size());
      if (introduced_ + static_cast<std::size_t>(fresh) <= n_) {
        const std::size_t saved = introduced_;
        for (VertexId u : chosen) link(v, u);
        for (int i = 0; i < fresh; ++i) link(v, static_cast<VertexId>(introduced_++));
        leaf();
        for (int i = 0; i < fresh; ++i) unlink(v, static_cast<VertexId>(--introduced_));
        for (VertexId u : chosen) unlink(v, u);
        introduced_ = saved;
      }
      if (static_cast<int>(chosen.size()) == need) return;
      for (std::size_t i = start; i < candidates.size(); ++i) {
        chosen.push_back(candidates[i]);
        pick(i + 1);
        chosen.pop_back();
      }
    };
    pick(0);
  }

  void fill(std::size_t v, const std::function<void(const Masks&)>& emit) {
    if (v == n_) {
      if (introduced_ == n_) emit(adj_);
      return;
    }
    expand(v, [&] { fill(v + 1, emit); });
  }

  void collect(std::size_t v, std::size_t depth, std::vector<Snapshot>& out) {
    if (v == depth || v == n_) {
      if (v < n_ ? v < introduced_ : introduced_ == n_) out.push_back({adj_, degree_, introduced_});
      return;
    }
    expand(v, [&] { collect(v + 1, depth, out); });
  }

  void link(VertexId a, VertexId b) {
    adj_[a] |= std::uint64_t{1} << b;
    adj_[b] |= std::uint64_t{1} << a;
    ++degree_[a];
    ++degree_[b];
  }
  void unlink(VertexId a, VertexId b) {
    adj_[a] &= ~(std::uint64_t{1} << b);
    adj_[b] &= ~(std::uint64_t{1} << a);
    --degree_[a];
    --degree_[b];
  }

  std::size_t n_;
  Masks adj_;
  std::vector<int> degree_;
  std::size_t introduced_ = 0;
};

CubicUniverse canonicalFilter(std::size_t n, std::size_t jobs) {
  BfsCubicGenerator seed(n);
  const auto prefixes = seed.prefixes(std::min<std::size_t>(n, 4));
  std::vector<std::unordered_set<std::string>> found(std::max<std::size_t>(1, jobs));
  std::atomic<std::size_t> nextTask{0};
  auto worker = [&](std::size_t id) {
    BfsCubicGenerator gen(n);
    for (std::size_t t = nextTask++; t < prefixes.size(); t = nextTask++) {
      gen.load(prefixes[t]);
      gen.run(std::min<std::size_t>(n, 4), [&](const Masks& adj) { found[id].insert(canonicalForm(adj).label.bytes); });
    }
  };
  if (found.size() == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < found.size(); ++i) pool.emplace_back(worker, i);
    for (auto& t : pool) t.join();
  }
  std::vector<std::string> labels;
  for (auto& set : found) labels.insert(labels.end(), set.begin(), set.end());
  return finish(n, std::move(labels));
}

// Grows connected graphs one vertex at a time; `keep(adj)` filters each level.
std::vector<std::string> extendLevels(std::size_t n, const std::function<bool(const Masks&)>& keep) {
  std::unordered_set<std::string> level{canonicalForm(Masks{0}).label.bytes};
  for (std::size_t size = 1; size < n; ++size) {
    std::unordered_set<std::string> next;
    for (const auto& label : level) {
      Masks adj = masksFromLabel(label);
      adj.push_back(0);
      const VertexId fresh = static_cast<VertexId>(size);
      std::vector<VertexId> open;
      for (VertexId v = 0; v < size; ++v) {
        if (std::popcount(adj[v]) < 3) open.push_back(v);
      }
      std::vector<VertexId> chosen;
      std::function<void(std::size_t)> pick = [&](std::size_t start) {
        if (!chosen.empty()) {
          for (VertexId u : chosen) {
            adj[u] |= std::uint64_t{1} << fresh;
            adj[fresh] |= std::uint64_t{1} << u;
          }
          if (keep(adj)) next.insert(canonicalForm(adj).label.bytes);
          for (VertexId u : chosen) adj[u] &= ~(std::uint64_t{1} << fresh);
          adj[fresh] = 0;
        }
        if (chosen.size() == 3) return;
        for (std::size_t i = start; i < open.size(); ++i) {
          chosen.push_back(open[i]);
          pick(i + 1);
          chosen.pop_back();
        }
      };
      pick(0);
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

CubicUniverse vertexExtension(std::size_t n) {
  // A prefix on j vertices leaves r = n - j vertices, each of degree 3. With
  // D stubs pointing out of the prefix: D <= 3r, D = 3r mod 2, and the r
  // vertices can absorb at most r(r-1) of their own stubs, so D >= 3r - r(r-1).
  auto feasible = [n](const Masks& adj) {
    const long j = static_cast<long>(adj.size());
    const long r = static_cast<long>(n) - j;
    long deficit = 0;
    for (std::uint64_t row : adj) deficit += 3 - std::popcount(row);
    if (r == 0) return deficit == 0;
    return deficit >= 1 && deficit <= 3 * r && (deficit - 3 * r) % 2 == 0 && deficit >= 3 * r - r * (r - 1);
  };
  return finish(n, extendLevels(n, feasible));
}

}  // namespace

CubicUniverse enumerateConnectedCubic(std::size_t n, EnumerationMethod method, std::size_t jobs) {
  if (n % 2 == 1) {
    CubicUniverse u;
    u.n = n;
    u.oddOrder = true;
    u.note = "no cubic graph has odd order";
    return u;
  }
  if (n < 4) {
    CubicUniverse u;
    u.n = n;
    u.note = "no cubic graph has fewer than 4 vertices";
    return u;
  }
  if (n > kMaxEnumerationOrder) {
    fail(ErrorCode::InvalidArgument, "enumerateConnectedCubic: n=" + std::to_string(n) + " exceeds " +
                                         std::to_string(kMaxEnumerationOrder));
  }
  return method == EnumerationMethod::CanonicalFilter ? canonicalFilter(n, jobs) : vertexExtension(n);
}

CubicUniverse universeFromGraph6(std::size_t n, std::string_view text) {
  std::vector<std::string> labels;
  std::size_t index = 0;
  for (const Graph& g : parseGraph6Stream(text)) {
    ++index;
    const Validation v = validate(g);
    if (g.order() != n || !v.connected || !v.cubic) {
      fail(ErrorCode::InvalidArgument, "universe record " + std::to_string(index) + " is not a connected cubic graph on " +
                                           std::to_string(n) + " vertices");
    }
    labels.push_back(canonicalLabel(g).bytes);
  }
  const std::size_t records = labels.size();
  CubicUniverse u = finish(n, std::move(labels));
  if (u.graphs.size() != records) {
    u.note = std::to_string(records - u.graphs.size()) + " isomorphic duplicate(s) dropped";
  }
  return u;
}

std::vector<Graph> enumerateConnectedSubcubic(std::size_t n) {
  if (n == 0) return {};
  if (n > 12) fail(ErrorCode::InvalidArgument, "enumerateConnectedSubcubic: n too large");
  auto labels = extendLevels(n, [](const Masks&) { return true; });
  std::sort(labels.begin(), labels.end());
  std::vector<Graph> out;
  for (const auto& label : labels) out.push_back(parseGraph6(label));
  return out;
}

}  // namespace leafspan
