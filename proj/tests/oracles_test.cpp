#include "support.hpp"

#include <doctest.h>
#include <pandora/classify.hpp>
#include <pandora/oracles.hpp>

#include <set>

using namespace pandora;

TEST_CASE("dendrogramTopDown") {
  SUBCASE("path a=2 b=0 c=1") {
    auto const d = dendrogramTopDown(testing::pathExample());
    CHECK(d.edgeParent == std::vector<EdgeRank>{kNoEdge, 0, 0});
  }
  SUBCASE("star is one sorted chain") {
    auto const d = dendrogramTopDown(testing::starExample());
    CHECK(d.edgeParent == std::vector<EdgeRank>{kNoEdge, 0, 1});
    CHECK(d.vertexParent == std::vector<EdgeRank>{2, 0, 1, 2});
  }
  SUBCASE("root is always rank 0") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 50; ++i) {
      auto const d = dendrogramTopDown(
          rankEdges(gen::randomTree(gen::Topology::RandomAttachment, 1 + rng() % 80, rng)));
      CHECK(d.edgeParent[0] == kNoEdge);
      CHECK(std::count(d.edgeParent.begin(), d.edgeParent.end(), kNoEdge) == 1);
    }
  }
}

TEST_CASE("dendrogramBottomUp") {
  SUBCASE("single edge") {
    auto const d = dendrogramBottomUp(testing::rankedFromText("3 0 1.0\n1 0 2.0\n2 1 0.5"));
    CHECK(d == dendrogramTopDown(testing::rankedFromText("3 0 1.0\n1 0 2.0\n2 1 0.5")));
    auto const one = dendrogramBottomUp(testing::rankedFromText("0 1 7"));
    CHECK(one.edgeParent == std::vector<EdgeRank>{kNoEdge});
    CHECK(one.vertexParent == std::vector<EdgeRank>{0, 0});
  }
  SUBCASE("path and star agree with top-down") {
    CHECK(dendrogramBottomUp(testing::pathExample()) == dendrogramTopDown(testing::pathExample()));
    CHECK(dendrogramBottomUp(testing::starExample()) == dendrogramTopDown(testing::starExample()));
  }
  SUBCASE("equal weights follow the originalId order") {
    for (auto topo : {gen::Topology::Star, gen::Topology::Path, gen::Topology::Caterpillar}) {
      auto const t = rankEdges(gen::constantWeightTree(topo, 40, 1.0));
      CHECK(dendrogramBottomUp(t) == dendrogramTopDown(t));
    }
  }
}

TEST_CASE("lcdaByAncestors") {
  auto const t = testing::pathExample();
  auto const d = dendrogramBottomUp(t);
  CHECK(lcdaByAncestors(d, 1, 1) == 1);
  CHECK(lcdaByAncestors(d, 0, 2) == 0);
  CHECK(lcdaByAncestors(d, 2, 1) == 0); // a and c meet at b
  CHECK_THROWS_AS(lcdaByAncestors(d, 0, 3), std::out_of_range);
}

TEST_CASE("heaviestOnPath") {
  auto const t = testing::pathExample();
  CHECK(heaviestOnPath(t, 2, 0) == 0); // adjacent
  CHECK(heaviestOnPath(t, 1, 1) == 1);
  CHECK(heaviestOnPath(t, 2, 1) == 0);
  CHECK_THROWS_AS(heaviestOnPath(t, 5, 1), std::out_of_range);

  // Adjacent edges: the smaller rank of the two.
  auto const star = testing::starExample();
  CHECK(heaviestOnPath(star, 2, 1) == 1);
}

TEST_CASE("LCDA equals the heaviest edge on the path for every pair, n = 64") {
  std::mt19937_64 rng(64);
  for (auto topo : {gen::Topology::RandomAttachment, gen::Topology::Caterpillar,
                    gen::Topology::Path}) {
    auto const t = rankEdges(gen::randomTree(topo, 64, rng));
    auto const d = dendrogramBottomUp(t);
    for (EdgeRank a = 0; a < 64; ++a)
      for (EdgeRank b = a; b < 64; ++b)
        REQUIRE(lcdaByAncestors(d, a, b) == heaviestOnPath(t, a, b));
  }
}

TEST_CASE("an edge is the LCDA of two other edges exactly when it is Alpha") {
  for (auto const &inst : testing::corpus(60, 99, 1, 40)) {
    INFO(inst.label);
    auto const t = rankEdges(inst.tree);
    auto const d = dendrogramBottomUp(t);
    std::set<EdgeRank> separators;
    for (EdgeRank a = 0; a < t.numEdges(); ++a)
      for (EdgeRank b = a + 1; b < t.numEdges(); ++b) {
        auto const l = lcdaByAncestors(d, a, b);
        if (l != a && l != b)
          separators.insert(l);
      }
    auto const kinds = classifyEdges(buildIncidence(t));
    std::set<EdgeRank> alpha;
    for (EdgeRank e = 0; e < t.numEdges(); ++e)
      if (kinds[e] == EdgeKind::Alpha)
        alpha.insert(e);
    CHECK(separators == alpha);
  }
}
