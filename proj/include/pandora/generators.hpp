#pragma once

// Synthetic tree topologies for tests and benchmarks.

#include <pandora/tree.hpp>

#include <random>
#include <string>

namespace pandora::gen {

enum class Topology { Star, Path, Caterpillar, RandomAttachment };

char const *toString(Topology t);

/// `numEdges` edges of the given shape with distinct weights drawn as a random
/// permutation of 1..n. Vertex ids and edge order are shuffled.
WeightedTree randomTree(Topology t, std::size_t numEdges, std::mt19937_64 &rng);

/// Same shape but every weight equal to `w`; nothing shuffled.
WeightedTree constantWeightTree(Topology t, std::size_t numEdges, Weight w);

/// Path whose edge weights follow an in-order balanced layout, giving a
/// dendrogram of height ceil(log2(n + 1)).
WeightedTree balancedPath(std::size_t numEdges);

} // namespace pandora::gen
