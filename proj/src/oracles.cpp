#include <pandora/oracles.hpp>
#include <pandora/union_find.hpp>

#include <algorithm>
#include <stdexcept>

namespace pandora {

namespace {

// Adjacency lists of the input tree, entries are (neighbor, rank).
std::vector<std::vector<std::pair<VertexId, EdgeRank>>> adjacency(RankedTree const &tree) {
  std::vector<std::vector<std::pair<VertexId, EdgeRank>>> adj(tree.numVertices());
  auto const edges = tree.edgeByRank();
  for (std::size_t r = 0; r < edges.size(); ++r) {
    adj[edges[r].u].emplace_back(edges[r].v, static_cast<EdgeRank>(r));
    adj[edges[r].v].emplace_back(edges[r].u, static_cast<EdgeRank>(r));
  }
  return adj;
}

} // namespace

Dendrogram dendrogramTopDown(RankedTree const &tree) {
  auto const adj = adjacency(tree);
  auto const edges = tree.edgeByRank();
  Dendrogram d;
  d.edgeParent.assign(tree.numEdges(), kNoEdge);
  d.vertexParent.assign(tree.numVertices(), kNoEdge);

  std::vector<char> removed(tree.numEdges(), 0);
  // A pending component is named by any vertex in it and the edge whose
  // removal created it.
  std::vector<std::pair<VertexId, EdgeRank>> pending{{0, kNoEdge}};
  std::vector<VertexId> frontier;
  std::vector<char> visited(tree.numVertices(), 0);
  std::vector<VertexId> touched;
  while (!pending.empty()) {
    auto const [seed, parent] = pending.back();
    pending.pop_back();

    EdgeRank heaviest = kNoEdge;
    frontier.assign(1, seed);
    touched.assign(1, seed);
    visited[seed] = 1;
    while (!frontier.empty()) {
      auto const x = frontier.back();
      frontier.pop_back();
      for (auto const &[y, r] : adj[x]) {
        if (removed[r] || visited[y])
          continue;
        visited[y] = 1;
        touched.push_back(y);
        frontier.push_back(y);
        heaviest = std::min(heaviest, r);
      }
    }
    for (auto x : touched)
      visited[x] = 0;

    if (heaviest == kNoEdge) {
      d.vertexParent[seed] = parent;
      continue;
    }
    d.edgeParent[heaviest] = parent;
    removed[heaviest] = 1;
    pending.emplace_back(edges[heaviest].u, heaviest);
    pending.emplace_back(edges[heaviest].v, heaviest);
  }
  return d;
}

Dendrogram dendrogramBottomUp(TreeView tree) {
  Dendrogram d;
  d.edgeParent.assign(tree.edges.size(), kNoEdge);
  d.vertexParent.assign(tree.numVertices, kNoEdge);
  UnionFind uf(tree.numVertices);
  // Latest merged edge of each class, indexed by representative.
  std::vector<EdgeRank> latest(tree.numVertices, kNoEdge);
  for (std::size_t i = tree.edges.size(); i-- > 0;) {
    auto const e = static_cast<EdgeRank>(i);
    for (VertexId x : {tree.edges[i].u, tree.edges[i].v}) {
      auto const root = uf.find(x);
      if (latest[root] != kNoEdge)
        d.edgeParent[latest[root]] = e;
      else
        d.vertexParent[x] = e;
    }
    latest[uf.unite(tree.edges[i].u, tree.edges[i].v)] = e;
  }
  return d;
}

Dendrogram dendrogramBottomUp(RankedTree const &tree) {
  auto const edges = tree.edgeByRank();
  std::vector<LevelEdge> view(edges.size());
  for (std::size_t r = 0; r < edges.size(); ++r)
    view[r] = {edges[r].u, edges[r].v, static_cast<EdgeRank>(r)};
  // Local index equals rank here, so no translation is needed.
  return dendrogramBottomUp(TreeView{tree.numVertices(), view});
}

EdgeRank lcdaByAncestors(Dendrogram const &d, EdgeRank a, EdgeRank b) {
  if (a >= d.numEdges() || b >= d.numEdges())
    throw std::out_of_range("edge rank out of range");
  std::vector<char> onPath(d.numEdges(), 0);
  for (auto x = a; x != kNoEdge; x = d.edgeParent[x])
    onPath[x] = 1;
  for (auto y = b; y != kNoEdge; y = d.edgeParent[y])
    if (onPath[y])
      return y;
  throw std::logic_error("dendrogram has more than one root");
}

EdgeRank heaviestOnPath(RankedTree const &tree, EdgeRank a, EdgeRank b) {
  if (a >= tree.numEdges() || b >= tree.numEdges())
    throw std::out_of_range("edge rank out of range");
  if (a == b)
    return a;
  auto const adj = adjacency(tree);
  auto const &ea = tree.edge(a);
  auto const &eb = tree.edge(b);

  // Root the tree at one endpoint of `a` and climb from the upper endpoint of
  // `b`; the climb plus both edges is exactly the connecting path.
  std::vector<VertexId> up(tree.numVertices(), kNoVertex);
  std::vector<EdgeRank> upEdge(tree.numVertices(), kNoEdge);
  std::vector<std::size_t> depth(tree.numVertices(), 0);
  std::vector<VertexId> stack{ea.u};
  up[ea.u] = ea.u;
  while (!stack.empty()) {
    auto const x = stack.back();
    stack.pop_back();
    for (auto const &[y, r] : adj[x]) {
      if (up[y] != kNoVertex)
        continue;
      up[y] = x;
      upEdge[y] = r;
      depth[y] = depth[x] + 1;
      stack.push_back(y);
    }
  }
  auto x = depth[eb.u] < depth[eb.v] ? eb.u : eb.v;
  EdgeRank best = std::min(a, b);
  while (x != ea.u) {
    best = std::min(best, upEdge[x]);
    x = up[x];
  }
  return best;
}

} // namespace pandora
