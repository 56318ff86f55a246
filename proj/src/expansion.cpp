#include <pandora/expansion.hpp>
#include <pandora/kernels.hpp>
#include <pandora/oracles.hpp>

#include <algorithm>

namespace pandora {

EdgeRank levelParent(EdgeRank e, std::size_t level, ContractionHierarchy const &h) {
  auto const s = h.supervertexOf(h.levels[0].edges[e].u, level);
  return h.levels[level].superMaxIncident[s];
}

ChainAssignment assignChains(ContractionHierarchy const &h) {
  auto const &base = h.levels[0].edges;
  auto const numLevels = h.numLevels();
  ChainAssignment assignment(base.size(), kRootChain);

#pragma omp parallel for schedule(static)
  for (std::size_t e = 0; e < base.size(); ++e) {
    auto const retired = h.retirementLevel[e];
    // Walk one endpoint up the hierarchy; both endpoints share a supervertex
    // from retired + 1 on.
    VertexId s = base[e].u;
    for (std::size_t k = 1; k <= numLevels; ++k) {
      s = h.levels[k].vertexMap[s];
      if (k <= retired)
        continue;
      auto const p = h.levels[k].superMaxIncident[s];
      if (p != kNoEdge && e > p) {
        assignment[e] = {p, static_cast<std::uint32_t>(k), s};
        break;
      }
    }
  }
  return assignment;
}

Dendrogram stitchChains(ChainAssignment const &assignment, VertexParents const &vp) {
  auto const n = assignment.size();

  // A supervertex heads at most one chain per level, so (level, anchor) names
  // a chain. Number chains densely, level by level, and put the root chain
  // (level 0) first; then (chain << 32 | rank) sorts each chain by rank.
  std::uint32_t maxLevel = 0;
  for (auto const &key : assignment)
    maxLevel = std::max(maxLevel, key.level);
  std::vector<std::uint64_t> levelOffset(maxLevel + 2, 0);
  {
    std::vector<std::uint32_t> maxAnchor(maxLevel + 1, 0);
    for (auto const &key : assignment)
      maxAnchor[key.level] = std::max(maxAnchor[key.level], key.anchorSupervertex);
    for (std::uint32_t k = 0; k <= maxLevel; ++k)
      levelOffset[k + 1] = levelOffset[k] + maxAnchor[k] + 1;
  }

  std::vector<std::uint64_t> entries(n);
#pragma omp parallel for schedule(static)
  for (std::size_t e = 0; e < n; ++e) {
    auto const &key = assignment[e];
    auto const chain = levelOffset[key.level] + key.anchorSupervertex;
    entries[e] = (chain << 32) | e;
  }
  kernels::sortUnique(entries.begin(), entries.end(), std::less<>{});

  Dendrogram d;
  d.edgeParent.resize(n);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    auto const cur = entries[i];
    auto const rank = static_cast<EdgeRank>(cur);
    bool const head = i == 0 || (entries[i - 1] >> 32) != (cur >> 32);
    d.edgeParent[rank] = head ? assignment[rank].terminalEdge
                              : static_cast<EdgeRank>(entries[i - 1]);
  }
  d.vertexParent = vp;
  return d;
}

std::size_t countChains(ChainAssignment const &assignment) {
  std::vector<ChainKey> keys(assignment);
  kernels::sortUnique(keys.begin(), keys.end(), std::less<>{});
  return static_cast<std::size_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

PandoraRun runPandora(RankedTree const &tree) {
  PandoraRun run;
  run.incidence = buildIncidence(tree);
  run.vertexParents = vertexParents(run.incidence);
  run.hierarchy = buildHierarchy(tree, run.incidence);
  run.chains = assignChains(run.hierarchy);
  run.dendrogram = stitchChains(run.chains, run.vertexParents);
  return run;
}

Dendrogram pandora(RankedTree const &tree) { return runPandora(tree).dendrogram; }

Dendrogram pandoraSingleLevel(RankedTree const &tree) {
  auto const inc = buildIncidence(tree);
  auto const base = inputLevel(tree, inc);
  auto const alpha = contractLevel(base.view(), base.kinds);
  auto const n = tree.numEdges();

  // Dendrogram of the contracted tree, translated to global ranks. Nodes of
  // that dendrogram are its edges and its supervertices; supervertex s is
  // encoded as n + s.
  auto const local = dendrogramBottomUp(alpha.view());
  auto globalOf = [&](EdgeRank localEdge) {
    return localEdge == kNoEdge ? kNoEdge : alpha.edges[localEdge].rank;
  };
  std::vector<EdgeRank> alphaParent(n, kNoEdge);
  for (std::size_t i = 0; i < alpha.edges.size(); ++i)
    alphaParent[alpha.edges[i].rank] = globalOf(local.edgeParent[i]);

  ChainAssignment assignment(n, kRootChain);
  // Alpha edges hang below their parent in the contracted dendrogram.
  for (auto const &e : alpha.edges)
    if (alphaParent[e.rank] != kNoEdge)
      assignment[e.rank] = {alphaParent[e.rank], 1, e.rank};
  for (std::size_t i = 0; i < base.edges.size(); ++i) {
    if (base.kinds[i] == EdgeKind::Alpha)
      continue;
    auto const e = static_cast<EdgeRank>(i);
    auto const s = alpha.vertexMap[base.edges[i].u];
    std::uint32_t below = static_cast<std::uint32_t>(n) + s;
    EdgeRank up = globalOf(local.vertexParent[s]);
    while (up != kNoEdge && up > e) {
      below = up;
      up = alphaParent[up];
    }
    if (up != kNoEdge)
      assignment[e] = {up, 1, below};
  }
  return stitchChains(assignment, vertexParents(inc));
}

} // namespace pandora
