#include <pandora/classify.hpp>

namespace pandora {

char const *toString(EdgeKind kind) {
  switch (kind) {
  case EdgeKind::Leaf:
    return "leaf";
  case EdgeKind::Chain:
    return "chain";
  case EdgeKind::Alpha:
    return "alpha";
  }
  return "?";
}

VertexParents vertexParents(IncidenceIndex const &inc) {
  VertexParents parents(inc.numVertices());
#pragma omp parallel for schedule(static)
  for (std::size_t v = 0; v < parents.size(); ++v)
    parents[v] = inc.maxIncident[v];
  return parents;
}

std::vector<EdgeKind> classifyByVertexParents(std::size_t numEdges,
                                              std::span<EdgeRank const> parentOfVertex) {
  std::vector<std::uint8_t> vertexChildren(numEdges, 0);
#pragma omp parallel for schedule(static)
  for (std::size_t v = 0; v < parentOfVertex.size(); ++v) {
    auto const p = parentOfVertex[v];
    if (p == kNoEdge)
      continue;
#pragma omp atomic
    ++vertexChildren[p];
  }
  std::vector<EdgeKind> kinds(numEdges);
#pragma omp parallel for schedule(static)
  for (std::size_t e = 0; e < numEdges; ++e)
    kinds[e] = vertexChildren[e] == 2   ? EdgeKind::Leaf
               : vertexChildren[e] == 1 ? EdgeKind::Chain
                                        : EdgeKind::Alpha;
  return kinds;
}

std::vector<EdgeKind> classifyEdges(IncidenceIndex const &inc) {
  return classifyByVertexParents(inc.incident.size() / 2, inc.maxIncident);
}

KindCounts countKinds(std::span<EdgeKind const> kinds) {
  std::size_t alpha = 0, leaf = 0, chain = 0;
#pragma omp parallel for schedule(static) reduction(+ : alpha, leaf, chain)
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    switch (kinds[i]) {
    case EdgeKind::Alpha:
      ++alpha;
      break;
    case EdgeKind::Leaf:
      ++leaf;
      break;
    case EdgeKind::Chain:
      ++chain;
      break;
    }
  }
  return {alpha, leaf, chain};
}

} // namespace pandora
