#include <pandora/contraction.hpp>
#include <pandora/kernels.hpp>
#include <pandora/union_find.hpp>

#include <bit>

namespace pandora {

std::vector<EdgeRank> maxIncidentRanks(TreeView tree) {
  std::vector<EdgeRank> result(tree.numVertices, kNoEdge);
  auto const edges = tree.edges;
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < edges.size(); ++i) {
    kernels::atomicMax(result[edges[i].u], edges[i].rank);
    kernels::atomicMax(result[edges[i].v], edges[i].rank);
  }
  return result;
}

namespace {

// Classification of a level tree. Local edge order matches rank order, so
// maxIncident in local indices is the same edge as in global ranks.
std::vector<EdgeKind> classifyLevel(TreeView tree) {
  std::vector<EdgeRank> localMax(tree.numVertices, kNoEdge);
  auto const edges = tree.edges;
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < edges.size(); ++i) {
    kernels::atomicMax(localMax[edges[i].u], static_cast<EdgeRank>(i));
    kernels::atomicMax(localMax[edges[i].v], static_cast<EdgeRank>(i));
  }
  return classifyByVertexParents(edges.size(), localMax);
}

} // namespace

std::vector<EdgeRank> ContractionLevel::survivingEdges() const {
  std::vector<EdgeRank> ranks(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i)
    ranks[i] = edges[i].rank;
  return ranks;
}

ContractionLevel contractLevel(TreeView prev, std::span<EdgeKind const> kinds) {
  auto const edges = prev.edges;
  auto const nv = prev.numVertices;

  ConcurrentUnionFind uf(nv);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (kinds[i] != EdgeKind::Alpha)
      uf.unite(edges[i].u, edges[i].v);

  std::vector<VertexId> rep(nv);
  std::vector<std::uint32_t> isRep(nv);
#pragma omp parallel for schedule(static)
  for (std::size_t v = 0; v < nv; ++v) {
    rep[v] = uf.find(static_cast<VertexId>(v));
    isRep[v] = rep[v] == v ? 1u : 0u;
  }
  std::vector<std::uint32_t> superId(nv);
  auto const superCount = kernels::exclusiveScan<std::uint32_t>(isRep, superId);

  ContractionLevel level;
  level.superCount = superCount;
  level.vertexMap.resize(nv);
#pragma omp parallel for schedule(static)
  for (std::size_t v = 0; v < nv; ++v)
    level.vertexMap[v] = superId[rep[v]];

  std::vector<std::uint32_t> isAlpha(edges.size());
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < edges.size(); ++i)
    isAlpha[i] = kinds[i] == EdgeKind::Alpha ? 1u : 0u;
  auto const survivors = kernels::compactIndices(isAlpha);

  level.edges.resize(survivors.size());
#pragma omp parallel for schedule(static)
  for (std::size_t j = 0; j < survivors.size(); ++j) {
    auto const &e = edges[survivors[j]];
    level.edges[j] = {level.vertexMap[e.u], level.vertexMap[e.v], e.rank};
  }
  level.superMaxIncident = maxIncidentRanks(level.view());
  level.kinds = classifyLevel(level.view());
  return level;
}

VertexId ContractionHierarchy::supervertexOf(VertexId v, std::size_t level) const {
  for (std::size_t k = 1; k <= level; ++k)
    v = levels[k].vertexMap[v];
  return v;
}

ContractionLevel inputLevel(RankedTree const &tree, IncidenceIndex const &inc) {
  ContractionLevel level;
  level.superCount = tree.numVertices();
  auto const byRank = tree.edgeByRank();
  level.edges.resize(byRank.size());
#pragma omp parallel for schedule(static)
  for (std::size_t r = 0; r < byRank.size(); ++r)
    level.edges[r] = {byRank[r].u, byRank[r].v, static_cast<EdgeRank>(r)};
  level.superMaxIncident = inc.maxIncident;
  level.kinds = classifyEdges(inc);
  return level;
}

ContractionHierarchy buildHierarchy(RankedTree const &tree, IncidenceIndex const &inc) {
  ContractionHierarchy h;
  h.retirementLevel.assign(tree.numEdges(), 0);
  h.levels.push_back(inputLevel(tree, inc));

  auto retire = [&h](std::size_t k) {
    auto const &level = h.levels[k];
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < level.edges.size(); ++i)
      if (level.kinds[i] != EdgeKind::Alpha)
        h.retirementLevel[level.edges[i].rank] = static_cast<std::uint32_t>(k);
  };

  retire(0);
  while (true) {
    auto const &prev = h.levels.back();
    h.levels.push_back(contractLevel(prev.view(), prev.kinds));
    retire(h.levels.size() - 1);
    if (h.levels.back().counts().alpha == 0)
      break;
  }
  return h;
}

std::size_t levelBound(std::size_t numEdges) {
  // ceil(log2(n + 1)) = bit width of n.
  return static_cast<std::size_t>(std::bit_width(numEdges));
}

} // namespace pandora
