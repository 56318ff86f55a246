#pragma once

#include <pandora/classify.hpp>
#include <pandora/tree.hpp>

#include <span>
#include <vector>

namespace pandora {

/// Edge of a (possibly contracted) tree: endpoints in that level's vertex ids,
/// identified by its global rank.
struct LevelEdge {
  VertexId u = 0;
  VertexId v = 0;
  EdgeRank rank = 0;

  friend bool operator==(LevelEdge const &, LevelEdge const &) = default;
};

/// Lightweight view of a tree at one contraction level. Edges are in
/// ascending rank order.
struct TreeView {
  std::size_t numVertices = 0;
  std::span<LevelEdge const> edges;
};

/// Largest incident rank per vertex (kNoEdge for isolated vertices).
std::vector<EdgeRank> maxIncidentRanks(TreeView tree);

/// One tree of the contraction hierarchy.
struct ContractionLevel {
  std::size_t superCount = 0;
  /// Surviving edges, ascending rank.
  std::vector<LevelEdge> edges;
  /// Previous-level vertex id -> supervertex id here. Empty for the input level.
  std::vector<VertexId> vertexMap;
  /// Largest surviving rank incident to each supervertex, or kNoEdge.
  std::vector<EdgeRank> superMaxIncident;
  /// Classification of `edges` within this level's tree.
  std::vector<EdgeKind> kinds;

  TreeView view() const { return {superCount, edges}; }
  std::vector<EdgeRank> survivingEdges() const;
  KindCounts counts() const { return countKinds(kinds); }
};

/// Contract every non-Alpha edge of `prev` (per `kinds`) into supervertices.
/// Supervertex ids are assigned in ascending order of the smallest
/// previous-level vertex they contain.
ContractionLevel contractLevel(TreeView prev, std::span<EdgeKind const> kinds);

struct ContractionHierarchy {
  /// levels[0] is the input tree; levels[1] the first contraction, and so on.
  std::vector<ContractionLevel> levels;
  /// Per edge rank: the level at which it is non-Alpha and gets contracted.
  /// Survivors of the last level carry numLevels().
  std::vector<std::uint32_t> retirementLevel;

  std::size_t numLevels() const { return levels.empty() ? 0 : levels.size() - 1; }
  /// Supervertex containing input vertex `v` at `level`.
  VertexId supervertexOf(VertexId v, std::size_t level) const;
};

/// The input level built from a ranked tree and its incidence.
ContractionLevel inputLevel(RankedTree const &tree, IncidenceIndex const &inc);

/// Contracts until a level has no Alpha edges. Always builds at least one
/// contracted level.
ContractionHierarchy buildHierarchy(RankedTree const &tree, IncidenceIndex const &inc);

/// ceil(log2(n + 1)), the bound on the number of contraction levels.
std::size_t levelBound(std::size_t numEdges);

} // namespace pandora
