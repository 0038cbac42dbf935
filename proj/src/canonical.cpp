#include "leafspan/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <tuple>

#include "leafspan/error.hpp"
#include "leafspan/graph6.hpp"

namespace leafspan {
namespace {

using Cells = std::vector<std::uint64_t>;

bool singleton(std::uint64_t cell) { return (cell & (cell - 1)) == 0; }

class Canonicalizer {
 public:
  Canonicalizer(std::span<const std::uint64_t> adj, std::uint64_t budget)
      : adj_(adj), n_(adj.size()), budget_(budget) {}

  CanonicalForm run() {
    Cells cells = initialCells();
    search(std::move(cells));
    CanonicalForm form;
    form.position.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) form.position[bestOrder_[i]] = static_cast<VertexId>(i);
    form.label.bytes = encode(bestOrder_);
    return form;
  }

 private:
  bool edge(VertexId a, VertexId b) const { return (adj_[a] >> b) & 1; }

  // Cells keyed by (degree, triangles, second-neighbourhood size), ascending.
  Cells initialCells() const {
    std::map<std::tuple<int, int, int>, std::uint64_t> groups;
    for (VertexId v = 0; v < n_; ++v) {
      int triangles = 0;
      std::uint64_t reach = 0;
      for (std::uint64_t rest = adj_[v]; rest != 0; rest &= rest - 1) {
        const auto w = static_cast<VertexId>(std::countr_zero(rest));
        triangles += std::popcount(adj_[w] & adj_[v]);
        reach |= adj_[w];
      }
      reach &= ~(adj_[v] | (std::uint64_t{1} << v));
      groups[{std::popcount(adj_[v]), triangles / 2, std::popcount(reach)}] |= std::uint64_t{1} << v;
    }
    Cells cells;
    for (const auto& [key, cell] : groups) cells.push_back(cell);
    return cells;
  }

  // Splits cells by neighbour counts into each splitter until stable.
  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
        const std::uint64_t splitter = cells[s];
        for (std::size_t c = 0; c < cells.size(); ++c) {
          const std::uint64_t cell = cells[c];
          if (singleton(cell)) continue;
          std::uint64_t byCount[65] = {};
          int distinct = 0;
          for (std::uint64_t rest = cell; rest != 0; rest &= rest - 1) {
            const auto v = static_cast<VertexId>(std::countr_zero(rest));
            const int count = std::popcount(adj_[v] & splitter);
            if (byCount[count] == 0) ++distinct;
            byCount[count] |= std::uint64_t{1} << v;
          }
          if (distinct == 1) continue;
          Cells pieces;
          for (const std::uint64_t piece : byCount) {
            if (piece != 0) pieces.push_back(piece);
          }
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
          changed = true;
          break;
        }
      }
    }
  }

  // Compares the bits fixed by the leading singleton cells with the best
  // leaf so far (-1 smaller, 0 equal, +1 larger).
  int comparePrefix(const Cells& cells, std::size_t fixed) const {
    if (bestOrder_.empty()) return -1;
    for (std::size_t j = 1; j < fixed; ++j) {
      const auto vj = static_cast<VertexId>(std::countr_zero(cells[j]));
      for (std::size_t i = 0; i < j; ++i) {
        const auto vi = static_cast<VertexId>(std::countr_zero(cells[i]));
        const bool mine = edge(vi, vj);
        const bool theirs = edge(bestOrder_[i], bestOrder_[j]);
        if (mine != theirs) return mine ? 1 : -1;
      }
    }
    return 0;
  }

  void search(Cells cells) {
    if (++nodes_ > budget_) fail(ErrorCode::BudgetExceeded, "canonicalForm: node budget exhausted");
    refine(cells);
    std::size_t fixed = 0;
    while (fixed < cells.size() && singleton(cells[fixed])) ++fixed;
    const int cmp = comparePrefix(cells, fixed);
    if (cmp > 0) return;
    if (fixed == cells.size()) {
      if (cmp < 0) {
        bestOrder_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) bestOrder_[i] = static_cast<VertexId>(std::countr_zero(cells[i]));
      }
      return;
    }
    const std::uint64_t target = cells[fixed];
    for (std::uint64_t rest = target; rest != 0; rest &= rest - 1) {
      const std::uint64_t bit = rest & (~rest + 1);
      Cells next;
      next.reserve(cells.size() + 1);
      next.insert(next.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(fixed));
      next.push_back(bit);
      next.push_back(target & ~bit);
      next.insert(next.end(), cells.begin() + static_cast<std::ptrdiff_t>(fixed) + 1, cells.end());
      search(std::move(next));
    }
  }

  std::string encode(const std::vector<VertexId>& order) const {
    std::vector<Edge> edges;
    for (std::size_t j = 1; j < n_; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (edge(order[i], order[j])) edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
      }
    }
    return writeGraph6(Graph::fromEdges(n_, edges));
  }

  std::span<const std::uint64_t> adj_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<VertexId> bestOrder_;
};

}  // namespace

CanonicalForm canonicalForm(std::span<const std::uint64_t> adjacency, std::uint64_t nodeBudget) {
  if (adjacency.size() > kMaxCanonicalOrder) {
    fail(ErrorCode::InvalidArgument, "canonicalForm: order " + std::to_string(adjacency.size()) + " exceeds " +
                                         std::to_string(kMaxCanonicalOrder));
  }
  if (adjacency.empty()) return CanonicalForm{CanonicalLabel{writeGraph6(Graph{})}, {}};
  return Canonicalizer(adjacency, nodeBudget).run();
}

CanonicalForm canonicalForm(const Graph& g, std::uint64_t nodeBudget) {
  if (g.order() > kMaxCanonicalOrder) {
    fail(ErrorCode::InvalidArgument, "canonicalForm: order " + std::to_string(g.order()) + " exceeds " +
                                         std::to_string(kMaxCanonicalOrder));
  }
  std::vector<std::uint64_t> adj(g.order());
  for (VertexId v = 0; v < g.order(); ++v) adj[v] = g.mask(v);
  return canonicalForm(adj, nodeBudget);
}

CanonicalLabel canonicalLabel(const Graph& g) { return canonicalForm(g).label; }

Graph canonicalGraph(const Graph& g) { return parseGraph6(canonicalLabel(g).bytes); }

}  // namespace leafspan
