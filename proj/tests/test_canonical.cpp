#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "leafspan/canonical.hpp"
#include "leafspan/family.hpp"
#include "leafspan/graph6.hpp"
#include "support/oracles.hpp"

using namespace leafspan;

TEST_SUITE("canonical") {
  TEST_CASE("label is invariant under relabelling") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 60; ++trial) {
      const Graph g = oracle::randomCubic(6 + 2 * (trial % 10), rng);
      const CanonicalLabel label = canonicalLabel(g);
      for (int r = 0; r < 4; ++r) CHECK(canonicalLabel(oracle::shuffled(g, rng)) == label);
    }
    const Graph g2 = buildGm(2).graph;
    CHECK(canonicalLabel(oracle::shuffled(g2, rng)) == canonicalLabel(g2));
  }

  TEST_CASE("label is a relabelling of the input") {
    std::mt19937_64 rng(7);
    const Graph g = oracle::randomCubic(14, rng);
    const CanonicalForm form = canonicalForm(g);
    CHECK(relabel(g, form.position) == canonicalGraph(g));
    CHECK(writeGraph6(canonicalGraph(g)) == form.label.bytes);
  }

  TEST_CASE("labels separate exactly the isomorphism classes of small graphs") {
    // Every graph on 6 vertices, grouped by the brute-force canonical string.
    const std::size_t n = 6;
    std::vector<Edge> all;
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b) all.emplace_back(a, b);
    }
    std::map<std::string, std::string> bruteToLabel;
    std::set<std::string> labels;
    for (std::uint32_t s = 0; s < (1u << all.size()); s += 3) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (s >> i & 1) edges.push_back(all[i]);
      }
      const Graph g = Graph::fromEdges(n, edges);
      const std::string brute = oracle::bruteCanonicalString(g);
      const std::string label = canonicalLabel(g).bytes;
      const auto [it, fresh] = bruteToLabel.emplace(brute, label);
      if (!fresh) CHECK(it->second == label);
      labels.insert(label);
    }
    CHECK(labels.size() == bruteToLabel.size());
  }

  TEST_CASE("random cubic pairs on 8 vertices") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 80; ++trial) {
      const Graph a = oracle::randomCubic(8, rng);
      const Graph b = oracle::randomCubic(8, rng);
      const bool isomorphic = oracle::bruteCanonicalString(a) == oracle::bruteCanonicalString(b);
      CHECK((canonicalLabel(a) == canonicalLabel(b)) == isomorphic);
    }
  }

  TEST_CASE("edge cases") {
    CHECK(canonicalLabel(Graph::fromEdges(0, {})).bytes == "?");
    CHECK(canonicalLabel(Graph::fromEdges(1, {})).bytes == "@");
    CHECK(canonicalLabel(parseGraph6("C~")).bytes == "C~");
    std::vector<Edge> path;
    for (VertexId i = 0; i + 1 < 65; ++i) path.emplace_back(i, i + 1);
    CHECK_THROWS(canonicalLabel(Graph::fromEdges(65, path)));
  }
}
