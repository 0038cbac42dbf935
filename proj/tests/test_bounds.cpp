#include <doctest.h>

#include <random>

#include "leafspan/bounds.hpp"
#include "leafspan/cubic_enum.hpp"
#include "leafspan/error.hpp"
#include "leafspan/family.hpp"
#include "leafspan/graph6.hpp"
#include "support/oracles.hpp"

using namespace leafspan;

namespace {

Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) edges.emplace_back(i, static_cast<VertexId>((i + 1) % n));
  return Graph::fromEdges(n, edges);
}

const char* const kPetersen = "IheA@GUAo";

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("theorem bound") {
    CHECK_FALSE(theoremBound(4).has_value());
    CHECK_FALSE(theoremBound(7).has_value());
    CHECK(theoremBound(8) == 2);
    CHECK(theoremBound(16) == 4);
    CHECK(theoremBound(70) == 16);
  }

  TEST_CASE("conjecture bound") {
    CHECK(conjectureBound(8) == 1);
    CHECK(conjectureBound(16) == 3);
    CHECK(conjectureBound(34) == 6);
  }

  TEST_CASE("both bounds are monotone in n") {
    for (std::size_t n = 8; n < 400; ++n) {
      CHECK(*theoremBound(n) <= *theoremBound(n + 1));
      CHECK(conjectureBound(n) <= conjectureBound(n + 1));
    }
  }

  TEST_CASE("pendant-block lower bound") {
    CHECK(leafBlockLowerBound(parseGraph6("C~")) == 2);
    CHECK(leafBlockLowerBound(buildGm(1).graph) == 3);
    CHECK(leafBlockLowerBound(buildGm(2).graph) == 6);
    CHECK(leafBlockLowerBound(Graph::fromEdges(1, {})) == 0);
    const std::vector<Edge> two{{0, 1}, {2, 3}};
    CHECK_THROWS_AS(leafBlockLowerBound(Graph::fromEdges(4, two)), Error);
  }

  TEST_CASE("sigma_k") {
    const Graph k4 = parseGraph6("C~");
    CHECK(sigmaK(k4, 1) == 3);
    CHECK(sigmaK(k4, 2) == kNoIndependentSet);
    CHECK(sigmaK(parseGraph6(kPetersen), 2) == 6);
    CHECK(sigmaK(parseGraph6(kPetersen), 4) == 12);
    CHECK(sigmaK(parseGraph6(kPetersen), 5) == kNoIndependentSet);
    CHECK_THROWS_AS(sigmaK(k4, 0), Error);
  }

  TEST_CASE("sigma_1 is the minimum degree and sigma_2 matches the pair scan") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 60; ++trial) {
      // Random connected graphs of mixed degree: a tree plus chords.
      const std::size_t n = 3 + trial % 12;
      std::vector<Edge> edges;
      for (VertexId v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<VertexId>(0, v - 1)(rng), v);
      for (int c = 0; c < trial % 7; ++c) {
        const VertexId a = std::uniform_int_distribution<VertexId>(0, static_cast<VertexId>(n - 1))(rng);
        const VertexId b = std::uniform_int_distribution<VertexId>(0, static_cast<VertexId>(n - 1))(rng);
        if (a != b) edges.emplace_back(a, b);
      }
      const Graph g = Graph::fromEdges(n, edges);
      CHECK(sigmaK(g, 1) == static_cast<int>(g.minDegree()));
      const auto expected = oracle::bruteSigma2(g);
      CHECK(sigmaK(g, 2) == expected.value_or(kNoIndependentSet));
    }
  }

  TEST_CASE("independence number") {
    CHECK(independenceNumber(parseGraph6("C~")) == 1);
    CHECK(independenceNumber(cycle(5)) == 2);
    CHECK(independenceNumber(parseGraph6(kPetersen)) == oracle::bruteIndependenceNumber(parseGraph6(kPetersen)));
    CHECK(independenceNumber(parseGraph6(kPetersen)) == 4);
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
      const Graph g = oracle::randomCubic(8 + 2 * (trial % 6), rng);
      CHECK(independenceNumber(g) == oracle::bruteIndependenceNumber(g));
    }
  }

  TEST_CASE("sufficient conditions") {
    const ConditionReport k4 = sufficientKEnded(parseGraph6("C~"));
    CHECK(k4.sigma2 == kNoIndependentSet);
    CHECK(k4.oreTraceable);
    CHECK(k4.btKEnded == 2);
    CHECK(toJsonLine(k4) ==
          R"({"graph_id":"C~","sigma2":null,"alpha":1,"connectivity":3,"ore_traceable":true,"bt_k_ended":2,"win_k_ended":2})");

    const ConditionReport pet = sufficientKEnded(parseGraph6(kPetersen));
    CHECK(pet.sigma2 == 6);
    CHECK(pet.btKEnded == 5);
    CHECK_FALSE(pet.oreTraceable);
    CHECK(pet.alpha == 4);
    CHECK(pet.connectivity == 3);
    CHECK(pet.winKEnded == 2);

    for (const Graph& g : enumerateConnectedCubic(10).graphs) {
      const ConditionReport r = sufficientKEnded(g);
      CHECK(r.btKEnded == 5);
      CHECK(r.btKEnded >= 2);
      REQUIRE(r.winKEnded.has_value());
      CHECK(*r.winKEnded >= 2);
    }
  }

  TEST_CASE("closure") {
    const Graph c4 = cycle(4);
    CHECK(bondyChvatalClosure(c4, ClosureMode::HamiltonianPath) == parseGraph6("C~"));
    CHECK(bondyChvatalClosure(c4, ClosureMode::HamiltonianCycle) == parseGraph6("C~"));
    const Graph pet = parseGraph6(kPetersen);
    CHECK(bondyChvatalClosure(pet, ClosureMode::HamiltonianPath) == pet);
    CHECK(bondyChvatalClosure(pet, ClosureMode::HamiltonianCycle) == pet);
    // C5 in cycle mode: 4 < 5, nothing to add; in path mode 4 >= 4 closes to K5.
    CHECK(bondyChvatalClosure(cycle(5), ClosureMode::HamiltonianCycle) == cycle(5));
    CHECK(bondyChvatalClosure(cycle(5), ClosureMode::HamiltonianPath).size() == 10);
  }

  TEST_CASE("closure fixpoint does not depend on scan order") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 5 + trial % 8;
      std::vector<Edge> edges;
      std::bernoulli_distribution coin(0.45);
      for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) {
          if (coin(rng)) edges.emplace_back(a, b);
        }
      }
      const Graph g = Graph::fromEdges(n, edges);
      for (ClosureMode mode : {ClosureMode::HamiltonianPath, ClosureMode::HamiltonianCycle}) {
        const Graph base = bondyChvatalClosure(g, mode);
        CHECK(bondyChvatalClosure(g, mode, 1 + trial) == base);
        CHECK(bondyChvatalClosure(g, mode, 1000 + trial) == base);
      }
    }
  }
}
