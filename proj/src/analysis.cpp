#include <pandora/analysis.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pandora {

std::size_t dendrogramHeight(Dendrogram const &d) {
  // Parents precede children in rank order, so one ascending sweep resolves
  // every depth.
  std::vector<std::size_t> depth(d.numEdges(), 0);
  for (std::size_t e = 0; e < d.numEdges(); ++e) {
    auto const p = d.edgeParent[e];
    depth[e] = p == kNoEdge ? 1 : depth[p] + 1;
  }
  std::size_t height = 0;
  for (auto p : d.vertexParent)
    if (p != kNoEdge)
      height = std::max(height, depth[p]);
  return height;
}

double skewness(std::size_t height, std::size_t n) {
  if (n < 2)
    return 0.0;
  return static_cast<double>(height) / std::log2(static_cast<double>(n));
}

double skewness(Dendrogram const &d) { return skewness(dendrogramHeight(d), d.numEdges()); }

std::size_t countDendrogramChains(Dendrogram const &d) {
  auto const vertexChildren = vertexChildCounts(d);
  std::size_t heads = 0;
  for (std::size_t e = 0; e < d.numEdges(); ++e) {
    auto const p = d.edgeParent[e];
    if (p == kNoEdge || vertexChildren[p] == 0)
      ++heads;
  }
  return heads;
}

std::vector<LevelCounts> levelStats(ContractionHierarchy const &h) {
  std::vector<LevelCounts> out;
  out.reserve(h.levels.size());
  for (std::size_t k = 0; k < h.levels.size(); ++k) {
    auto const c = h.levels[k].counts();
    LevelCounts lc{c.alpha, c.leaf, c.chain, h.levels[k].edges.size()};
    if (lc.alpha + lc.leaf + lc.chain != lc.survivors)
      throw std::logic_error("level " + std::to_string(k) + ": kind counts do not sum to n");
    if (lc.survivors > 0 && lc.alpha + 1 != lc.leaf)
      throw std::logic_error("level " + std::to_string(k) + ": n_alpha != n_leaf - 1");
    out.push_back(lc);
  }
  return out;
}

DendroStats computeStats(Dendrogram const &d, ContractionHierarchy const &h) {
  DendroStats s;
  s.numEdges = d.numEdges();
  s.height = dendrogramHeight(d);
  s.skewnessEdges = skewness(s.height, s.numEdges);
  s.skewnessPoints = skewness(s.height, s.numEdges + 1);
  s.chainCount = countDendrogramChains(d);
  s.perLevel = levelStats(h);
  return s;
}

double throughput(std::size_t points, double seconds) {
  if (!(seconds > 0.0))
    throw std::invalid_argument("duration must be positive");
  return 1e-6 * static_cast<double>(points) / seconds;
}

} // namespace pandora
