#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace pandora {

// Edge ranks: position after the descending-weight sort. Rank 0 is the
// heaviest edge and the dendrogram root.
using EdgeRank = std::uint32_t;
using VertexId = std::uint32_t;
using Weight = double;

inline constexpr EdgeRank kNoEdge = std::numeric_limits<EdgeRank>::max();
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Weight w = 0.0;
  std::uint32_t originalId = 0;

  friend bool operator==(Edge const &, Edge const &) = default;
};

// Raised for malformed or structurally invalid input.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace pandora
