#pragma once

#include <pandora/tree.hpp>

#include <span>
#include <vector>

namespace pandora {

/// Edge-node type by how many vertex nodes it parents: Leaf (two), Chain
/// (one) or Alpha (none).
enum class EdgeKind : std::uint8_t { Leaf, Chain, Alpha };

char const *toString(EdgeKind kind);

/// Dendrogram parent of each vertex: its largest incident rank.
using VertexParents = std::vector<EdgeRank>;

VertexParents vertexParents(IncidenceIndex const &inc);

std::vector<EdgeKind> classifyEdges(IncidenceIndex const &inc);

/// Classifies `numEdges` edges given each vertex's parent, expressed in the
/// same index space as the edges. Vertices with parent kNoEdge are ignored.
std::vector<EdgeKind> classifyByVertexParents(std::size_t numEdges,
                                              std::span<EdgeRank const> parentOfVertex);

struct KindCounts {
  std::size_t alpha = 0;
  std::size_t leaf = 0;
  std::size_t chain = 0;

  std::size_t total() const { return alpha + leaf + chain; }
  friend bool operator==(KindCounts const &, KindCounts const &) = default;
};

KindCounts countKinds(std::span<EdgeKind const> kinds);

} // namespace pandora
