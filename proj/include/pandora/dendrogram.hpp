#pragma once

#include <pandora/types.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pandora {

/// Parent pointers of a single-linkage dendrogram in rank space. The root edge
/// has parent kNoEdge.
struct Dendrogram {
  std::vector<EdgeRank> edgeParent;
  std::vector<EdgeRank> vertexParent;

  std::size_t numEdges() const { return edgeParent.size(); }
  std::size_t numVertices() const { return vertexParent.size(); }

  friend bool operator==(Dendrogram const &, Dendrogram const &) = default;
};

/// Human-readable description of the first mismatch, if any.
std::optional<std::string> firstDifference(Dendrogram const &a, Dendrogram const &b);

/// Text format:
///   #dendrogram v1 n=<edges> nv=<vertices>
///   E <rank> <parentRank|-1>     (one per edge, ascending rank)
///   V <id> <parentRank>          (one per vertex, ascending id)
void writeDendrogram(std::ostream &out, Dendrogram const &d);
Dendrogram readDendrogram(std::istream &in);
Dendrogram readDendrogramFile(std::string const &path);

/// Checks the structural invariants (root is rank 0, parents are heavier,
/// every edge node has exactly two children). Returns the first violation.
std::optional<std::string> validateDendrogram(Dendrogram const &d);

/// Per edge: how many vertex nodes name it as parent.
std::vector<std::uint8_t> vertexChildCounts(Dendrogram const &d);

} // namespace pandora
