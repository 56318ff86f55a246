#pragma once

#include <pandora/classify.hpp>
#include <pandora/contraction.hpp>
#include <pandora/dendrogram.hpp>

#include <compare>
#include <vector>

namespace pandora {

/// Identifies the leaf chain an edge belongs to: the contracted edge the chain
/// hangs from, the level it was found at, and the supervertex (at that level)
/// on whose side the chain lies. The root chain has terminalEdge == kNoEdge.
struct ChainKey {
  EdgeRank terminalEdge = kNoEdge;
  std::uint32_t level = 0;
  VertexId anchorSupervertex = 0;

  bool isRoot() const { return terminalEdge == kNoEdge; }
  friend auto operator<=>(ChainKey const &, ChainKey const &) = default;
};

inline constexpr ChainKey kRootChain{};

/// ChainKey per edge rank.
using ChainAssignment = std::vector<ChainKey>;

/// Dendrogram parent of the level-`level` supervertex containing edge `e`, or
/// kNoEdge if that supervertex has no incident edge. Requires `level` > 0.
EdgeRank levelParent(EdgeRank e, std::size_t level, ContractionHierarchy const &h);

ChainAssignment assignChains(ContractionHierarchy const &h);

/// Sorts each chain by rank and links it below its terminal edge.
Dendrogram stitchChains(ChainAssignment const &assignment, VertexParents const &vp);

std::size_t countChains(ChainAssignment const &assignment);

/// Every intermediate product of one PANDORA run.
struct PandoraRun {
  IncidenceIndex incidence;
  VertexParents vertexParents;
  ContractionHierarchy hierarchy;
  ChainAssignment chains;
  Dendrogram dendrogram;
};

PandoraRun runPandora(RankedTree const &tree);
Dendrogram pandora(RankedTree const &tree);

/// Single-level expansion: place each non-Alpha edge by walking up the
/// dendrogram of the first contracted tree. Quadratic in the worst case;
/// kept as a debugging cross-check.
Dendrogram pandoraSingleLevel(RankedTree const &tree);

} // namespace pandora
