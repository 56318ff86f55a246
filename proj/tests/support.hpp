#pragma once

#include <pandora/generators.hpp>
#include <pandora/points.hpp>
#include <pandora/tree.hpp>

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace pandora::testing {

inline RankedTree rankedFromText(std::string const &text) {
  std::istringstream in(text);
  return rankEdges(loadEdgeList(in));
}

// Path 0-1-2-3 with edges a=(0,1), b=(1,2), c=(2,3); b heaviest, then c, then
// a, so ranks are a=2, b=0, c=1.
inline RankedTree pathExample() { return rankedFromText("0 1 1.0\n1 2 3.0\n2 3 2.0\n"); }

inline RankedTree starExample() { return rankedFromText("0 1 3.0\n0 2 2.0\n0 3 1.0\n"); }

/// Tree where rank r has weight 100 - r.
inline RankedTree fromRankedPairs(std::size_t nv,
                                  std::vector<std::pair<VertexId, VertexId>> const &byRank) {
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < byRank.size(); ++r)
    edges.push_back({byRank[r].first, byRank[r].second, 100.0 - static_cast<double>(r), 0});
  return rankEdges(WeightedTree::fromEdges(nv, std::move(edges)));
}

struct Instance {
  std::string label;
  WeightedTree tree;
};

/// Mixed corpus: star, path, caterpillar, random attachment and
/// mutual-reachability MSTs of Gaussian and uniform clouds.
inline std::vector<Instance> corpus(std::size_t count, std::uint64_t seed, std::size_t minEdges,
                                    std::size_t maxEdges) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> sizeDist(minEdges, maxEdges);
  std::vector<Instance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto const n = sizeDist(rng);
    auto const kind = i % 6;
    if (kind < 4) {
      auto const t = static_cast<gen::Topology>(kind);
      out.push_back({std::string(gen::toString(t)) + " n=" + std::to_string(n),
                     gen::randomTree(t, n, rng)});
    } else {
      auto const dist = kind == 4 ? Distribution::Normal : Distribution::Uniform;
      auto const dim = 2 + rng() % 3;
      auto const pc = genPoints(dist, n + 1, dim, rng());
      auto const minPts = std::min<std::size_t>(n + 1, 2 + rng() % 4);
      out.push_back({std::string("mreach-") + toString(dist) + " n=" + std::to_string(n),
                     mutualReachabilityMst(pc, minPts)});
    }
  }
  return out;
}

} // namespace pandora::testing
