#include <pandora/generators.hpp>

#include <algorithm>
#include <numeric>

namespace pandora::gen {

char const *toString(Topology t) {
  switch (t) {
  case Topology::Star:
    return "star";
  case Topology::Path:
    return "path";
  case Topology::Caterpillar:
    return "caterpillar";
  case Topology::RandomAttachment:
    return "random";
  }
  return "?";
}

namespace {

// Unweighted edges of the shape on vertices 0..n.
std::vector<std::pair<VertexId, VertexId>> shape(Topology t, std::size_t numEdges,
                                                 std::mt19937_64 *rng) {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(numEdges);
  auto const nv = static_cast<VertexId>(numEdges + 1);
  switch (t) {
  case Topology::Star:
    for (VertexId v = 1; v < nv; ++v)
      out.emplace_back(0, v);
    break;
  case Topology::Path:
    for (VertexId v = 1; v < nv; ++v)
      out.emplace_back(v - 1, v);
    break;
  case Topology::Caterpillar: {
    // Spine of about half the vertices, each remaining vertex a leg.
    VertexId const spine = std::max<VertexId>(1, nv / 2);
    for (VertexId v = 1; v < spine; ++v)
      out.emplace_back(v - 1, v);
    for (VertexId v = spine; v < nv; ++v)
      out.emplace_back(v % spine, v);
    break;
  }
  case Topology::RandomAttachment:
    for (VertexId v = 1; v < nv; ++v) {
      std::uniform_int_distribution<VertexId> pick(0, v - 1);
      out.emplace_back(rng ? pick(*rng) : v - 1, v);
    }
    break;
  }
  return out;
}

} // namespace

WeightedTree randomTree(Topology t, std::size_t numEdges, std::mt19937_64 &rng) {
  auto pairs = shape(t, numEdges, &rng);
  auto const nv = numEdges + 1;
  std::vector<VertexId> relabel(nv);
  std::iota(relabel.begin(), relabel.end(), VertexId{0});
  std::shuffle(relabel.begin(), relabel.end(), rng);
  std::vector<Weight> weights(numEdges);
  std::iota(weights.begin(), weights.end(), 1.0);
  std::shuffle(weights.begin(), weights.end(), rng);
  std::shuffle(pairs.begin(), pairs.end(), rng);

  std::vector<Edge> edges(numEdges);
  for (std::size_t i = 0; i < numEdges; ++i) {
    auto [a, b] = pairs[i];
    if (rng() & 1)
      std::swap(a, b);
    edges[i] = {relabel[a], relabel[b], weights[i], 0};
  }
  return WeightedTree::fromEdges(nv, std::move(edges));
}

WeightedTree constantWeightTree(Topology t, std::size_t numEdges, Weight w) {
  auto const pairs = shape(t, numEdges, nullptr);
  std::vector<Edge> edges(numEdges);
  for (std::size_t i = 0; i < numEdges; ++i)
    edges[i] = {pairs[i].first, pairs[i].second, w, 0};
  return WeightedTree::fromEdges(numEdges + 1, std::move(edges));
}

WeightedTree balancedPath(std::size_t numEdges) {
  // Weight of path edge i = number of trailing zeros of (i + 1): the middle
  // edge of every dyadic block is the heaviest in that block. Any range of
  // positions has a unique element with the most trailing zeros, so no ties.
  std::vector<Edge> edges(numEdges);
  for (std::size_t i = 0; i < numEdges; ++i) {
    auto const pos = i + 1;
    double const w = static_cast<double>(__builtin_ctzll(pos));
    edges[i] = {static_cast<VertexId>(i), static_cast<VertexId>(i + 1), w, 0};
  }
  return WeightedTree::fromEdges(numEdges + 1, std::move(edges));
}

} // namespace pandora::gen
