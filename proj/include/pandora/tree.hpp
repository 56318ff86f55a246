#pragma once

#include <pandora/types.hpp>

#include <iosfwd>
#include <span>
#include <vector>

namespace pandora {

/// Input spanning tree: vertex count plus weighted edge list.
///
/// Construct through `WeightedTree::fromEdges` or `loadEdgeList`; both validate
/// that the edges form a spanning tree on contiguous 0-based vertex ids.
class WeightedTree {
public:
  WeightedTree() = default;

  /// Validates and takes ownership. `originalId` of each edge is overwritten
  /// with its position in `edges`.
  static WeightedTree fromEdges(std::size_t numVertices, std::vector<Edge> edges);

  std::size_t numVertices() const { return numVertices_; }
  std::size_t numEdges() const { return edges_.size(); }
  std::span<Edge const> edges() const { return edges_; }

private:
  std::size_t numVertices_ = 0;
  std::vector<Edge> edges_;
};

/// Reads "u v w" lines ('#' lines are comments). The vertex count is the
/// largest id plus one.
WeightedTree loadEdgeList(std::istream &in);
WeightedTree loadEdgeListFile(std::string const &path);

/// Writes the tree back out in the format `loadEdgeList` accepts, in
/// originalId order. Weights round-trip exactly.
void writeEdgeList(std::ostream &out, WeightedTree const &tree);

/// Edges permuted into rank order: descending weight, ties by ascending
/// originalId.
class RankedTree {
public:
  RankedTree() = default;
  RankedTree(WeightedTree base, std::vector<EdgeRank> rankOf);

  WeightedTree const &base() const { return base_; }
  std::size_t numVertices() const { return base_.numVertices(); }
  std::size_t numEdges() const { return edgeByRank_.size(); }

  std::span<EdgeRank const> rankOf() const { return rankOf_; }
  std::span<Edge const> edgeByRank() const { return edgeByRank_; }
  Edge const &edge(EdgeRank rank) const { return edgeByRank_[rank]; }

private:
  WeightedTree base_;
  std::vector<EdgeRank> rankOf_;
  std::vector<Edge> edgeByRank_;
};

RankedTree rankEdges(WeightedTree tree);

/// Per-vertex incident edge ranks (CSR) and the largest incident rank.
struct IncidenceIndex {
  std::vector<std::size_t> offsets;
  std::vector<EdgeRank> incident;
  std::vector<EdgeRank> maxIncident;

  std::size_t numVertices() const { return maxIncident.size(); }
  std::span<EdgeRank const> incidentTo(VertexId v) const {
    return std::span<EdgeRank const>(incident).subspan(
        offsets[v], offsets[v + 1] - offsets[v]);
  }
};

/// Incidence lists are sorted by ascending rank.
IncidenceIndex buildIncidence(RankedTree const &tree);

} // namespace pandora
