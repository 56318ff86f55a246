#pragma once

#include <pandora/classify.hpp>
#include <pandora/contraction.hpp>
#include <pandora/dendrogram.hpp>

#include <vector>

namespace pandora {

struct LevelCounts {
  std::size_t alpha = 0;
  std::size_t leaf = 0;
  std::size_t chain = 0;
  std::size_t survivors = 0;

  friend bool operator==(LevelCounts const &, LevelCounts const &) = default;
};

struct DendroStats {
  std::size_t numEdges = 0;
  std::size_t height = 0;
  /// height / log2(edges) and height / log2(points).
  double skewnessEdges = 0.0;
  double skewnessPoints = 0.0;
  /// Maximal unbranched segments of the dendrogram.
  std::size_t chainCount = 0;
  std::vector<LevelCounts> perLevel;
};

/// Edge nodes on the longest root-to-vertex path.
std::size_t dendrogramHeight(Dendrogram const &d);

/// height / log2(n) with n the number of edges; 0 when n < 2.
double skewness(Dendrogram const &d);
double skewness(std::size_t height, std::size_t n);

/// Edge nodes that start a chain: the root and every child of a branching
/// (Alpha) edge node.
std::size_t countDendrogramChains(Dendrogram const &d);

/// Per-level kind counts for levels 0..L. Throws std::logic_error if a
/// non-empty level violates n_alpha = n_leaf - 1 or n_alpha + n_leaf + n_chain = n.
std::vector<LevelCounts> levelStats(ContractionHierarchy const &h);

DendroStats computeStats(Dendrogram const &d, ContractionHierarchy const &h);

/// Millions of points per second. Throws std::invalid_argument if seconds <= 0.
double throughput(std::size_t points, double seconds);

} // namespace pandora
