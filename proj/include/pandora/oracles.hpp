#pragma once

// Reference dendrogram constructions and LCDA helpers. Single-threaded;
// intended for verification and as the sequential baseline.

#include <pandora/contraction.hpp>
#include <pandora/dendrogram.hpp>
#include <pandora/tree.hpp>

namespace pandora {

/// Recursive splitting at the heaviest edge of each component. O(n h).
Dendrogram dendrogramTopDown(RankedTree const &tree);

/// Union-find merge in ascending weight order.
Dendrogram dendrogramBottomUp(RankedTree const &tree);

/// Bottom-up construction on a level tree. Edge parents are returned as local
/// edge indices (kNoEdge for the root); vertex parents likewise.
Dendrogram dendrogramBottomUp(TreeView tree);

/// Lowest common dendrogram ancestor by walking parent pointers.
EdgeRank lcdaByAncestors(Dendrogram const &d, EdgeRank a, EdgeRank b);

/// Smallest rank on the tree path joining two edges, both included.
EdgeRank heaviestOnPath(RankedTree const &tree, EdgeRank a, EdgeRank b);

} // namespace pandora
