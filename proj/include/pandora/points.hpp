#pragma once

#include <pandora/tree.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pandora {

enum class Distribution { Normal, Uniform };

Distribution parseDistribution(std::string const &name);
char const *toString(Distribution dist);

/// Row-major n x dim coordinates.
struct PointCloud {
  std::size_t dim = 0;
  std::vector<double> coords;
  Distribution distribution = Distribution::Uniform;
  std::uint64_t seed = 0;

  std::size_t size() const { return dim == 0 ? 0 : coords.size() / dim; }
  std::span<double const> point(std::size_t i) const {
    return std::span<double const>(coords).subspan(i * dim, dim);
  }
};

inline constexpr std::size_t kMinDim = 2;
inline constexpr std::size_t kMaxDim = 8;

/// Standard normal per axis, or uniform on [0, 1)^dim. Reproducible per seed.
PointCloud genPoints(Distribution dist, std::size_t n, std::size_t dim, std::uint64_t seed);

PointCloud makePointCloud(std::size_t dim, std::vector<double> coords);

double euclidean(std::span<double const> a, std::span<double const> b);

/// Distance to the minPts-th nearest neighbour, the point itself counting as
/// the first.
std::vector<double> coreDistances(PointCloud const &pc, std::size_t minPts);
std::vector<double> coreDistancesBruteForce(PointCloud const &pc, std::size_t minPts);

/// MST under mutual reachability max(core(a), core(b), |a - b|). Edges are
/// compared by (weight, smaller id, larger id), so the tree is unique; the
/// result lists edges in that order.
WeightedTree mutualReachabilityMst(PointCloud const &pc, std::size_t minPts);
/// Dense Prim without a stored distance matrix. O(n^2).
WeightedTree mutualReachabilityMstDense(PointCloud const &pc, std::size_t minPts);

} // namespace pandora
