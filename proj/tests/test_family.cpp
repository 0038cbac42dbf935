#include <doctest.h>

#include <json.hpp>

#include "leafspan/blocks.hpp"
#include "leafspan/error.hpp"
#include "leafspan/family.hpp"

using namespace leafspan;

TEST_SUITE("family") {
  TEST_CASE("closed forms") {
    const std::size_t orders[] = {16, 34, 70, 142, 286, 574};
    const std::size_t branches[] = {3, 6, 12, 24, 48, 96};
    for (int m = 1; m <= kMaxFamilyLevel; ++m) {
      CHECK(familyOrder(m) == orders[m - 1]);
      CHECK(familyBranchCount(m) == branches[m - 1]);
      CHECK(familyOrder(m) + 2 == 6 * familyBranchCount(m));
    }
  }

  TEST_CASE("G_1 layout") {
    const FamilyLevel g1 = buildG1();
    CHECK(g1.order() == 16);
    CHECK(g1.graph.size() == 24);
    CHECK(g1.junctions == std::vector<VertexId>{0});
    REQUIRE(g1.branches.size() == 3);
    CHECK(g1.branches[0] == Branch{1, 2, 3, 4, 5});
    CHECK(g1.branches[1] == Branch{6, 7, 8, 10, 9});
    CHECK(g1.branches[2] == Branch{11, 12, 13, 14, 15});
    for (const Branch& b : g1.branches) {
      for (const auto& [i, j] : kBranchPattern) CHECK(g1.graph.hasEdge(b[i], b[j]));
    }
    CHECK_NOTHROW(checkFamilyLevel(g1));
  }

  TEST_CASE("every level satisfies the structural invariants") {
    for (int m = 1; m <= kMaxFamilyLevel; ++m) {
      const FamilyLevel level = buildGm(m);
      CAPTURE(m);
      CHECK(level.m == m);
      CHECK(level.order() == familyOrder(m));
      CHECK(level.branchCount() == familyBranchCount(m));
      CHECK(validate(level.graph).cubic);
      CHECK(validate(level.graph).connected);
      CHECK(blockCutDecomposition(level.graph).pendantBlockCount == level.branchCount());
      CHECK_NOTHROW(checkFamilyLevel(level));
    }
  }

  TEST_CASE("expansion doubles the branches") {
    const FamilyLevel g2 = expandOnce(buildG1());
    CHECK(g2.order() == 34);
    CHECK(g2.branchCount() == 6);
    CHECK(g2.junctions == std::vector<VertexId>{0, 1, 6, 11});
    CHECK(g2.graph == buildGm(2).graph);
  }

  TEST_CASE("out of range levels") {
    CHECK_THROWS_AS(buildGm(0), Error);
    CHECK_THROWS_AS(buildGm(kMaxFamilyLevel + 1), Error);
  }

  TEST_CASE("a corrupted level is rejected") {
    FamilyLevel broken = buildG1();
    std::swap(broken.branches[0][1], broken.branches[0][2]);
    CHECK_THROWS_AS(checkFamilyLevel(broken), Error);
    FamilyLevel missing = buildG1();
    missing.junctions.clear();
    CHECK_THROWS_AS(checkFamilyLevel(missing), Error);
  }

  TEST_CASE("sidecar") {
    const auto j = nlohmann::json::parse(familySidecarJson(buildGm(2)));
    CHECK(j["m"] == 2);
    CHECK(j["order"] == 34);
    CHECK(j["branchCount"] == 6);
    CHECK(j["bridges"].size() == 6 + 3);
  }
}
