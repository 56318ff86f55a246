#include <pandora/kernels.hpp>
#include <pandora/tree.hpp>
#include <pandora/union_find.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace pandora {

namespace {

std::uint64_t undirectedKey(VertexId a, VertexId b) {
  if (a > b)
    std::swap(a, b);
  return (std::uint64_t{a} << 32) | b;
}

} // namespace

WeightedTree WeightedTree::fromEdges(std::size_t numVertices, std::vector<Edge> edges) {
  if (numVertices < 2)
    throw InputError("tree needs at least two vertices");
  if (numVertices >= kNoVertex)
    throw InputError("too many vertices");
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto &e = edges[i];
    e.originalId = static_cast<std::uint32_t>(i);
    if (e.u >= numVertices || e.v >= numVertices)
      throw InputError("edge " + std::to_string(i) + " references a vertex out of range");
    if (!std::isfinite(e.w))
      throw InputError("edge " + std::to_string(i) + " has a non-finite weight");
    if (e.u == e.v)
      throw InputError("edge " + std::to_string(i) + " is a self-loop");
    if (!seen.insert(undirectedKey(e.u, e.v)).second)
      throw InputError("edge " + std::to_string(i) + " duplicates an earlier edge (" +
                       std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
  }
  if (edges.size() != numVertices - 1)
    throw InputError("edge count " + std::to_string(edges.size()) + " != vertex count " +
                     std::to_string(numVertices) + " - 1 (disconnected or cyclic input)");
  UnionFind uf(numVertices);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (uf.find(edges[i].u) == uf.find(edges[i].v))
      throw InputError("edge " + std::to_string(i) + " closes a cycle");
    uf.unite(edges[i].u, edges[i].v);
  }
  // n - 1 edges without a cycle on n vertices is connected.

  WeightedTree tree;
  tree.numVertices_ = numVertices;
  tree.edges_ = std::move(edges);
  return tree;
}

WeightedTree loadEdgeList(std::istream &in) {
  std::vector<Edge> edges;
  std::size_t maxId = 0;
  bool any = false;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    auto const first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    std::istringstream fields(line);
    std::string su, sv, sw, extra;
    if (!(fields >> su >> sv >> sw) || (fields >> extra))
      throw InputError("line " + std::to_string(lineNo) + ": expected \"u v w\"");

    auto parseId = [&](std::string const &s) {
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size() || value >= kNoVertex)
        throw InputError("line " + std::to_string(lineNo) + ": bad vertex id '" + s + "'");
      return static_cast<VertexId>(value);
    };
    Edge e;
    e.u = parseId(su);
    e.v = parseId(sv);
    try {
      std::size_t used = 0;
      e.w = std::stod(sw, &used);
      if (used != sw.size())
        throw std::invalid_argument(sw);
    } catch (std::out_of_range const &) {
      throw InputError("line " + std::to_string(lineNo) + ": non-finite weight '" + sw + "'");
    } catch (std::invalid_argument const &) {
      throw InputError("line " + std::to_string(lineNo) + ": bad weight '" + sw + "'");
    }
    if (!std::isfinite(e.w))
      throw InputError("line " + std::to_string(lineNo) + ": non-finite weight '" + sw + "'");
    maxId = std::max<std::size_t>({maxId, e.u, e.v});
    any = true;
    edges.push_back(e);
  }
  if (!any)
    throw InputError("no edges in input");
  return WeightedTree::fromEdges(maxId + 1, std::move(edges));
}

WeightedTree loadEdgeListFile(std::string const &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open " + path);
  return loadEdgeList(in);
}

void writeEdgeList(std::ostream &out, WeightedTree const &tree) {
  std::array<char, 64> buf{};
  for (auto const &e : tree.edges()) {
    // Shortest representation that round-trips.
    auto const res = std::to_chars(buf.data(), buf.data() + buf.size(), e.w);
    out << e.u << ' ' << e.v << ' ' << std::string_view(buf.data(), res.ptr - buf.data())
        << '\n';
  }
}

RankedTree::RankedTree(WeightedTree base, std::vector<EdgeRank> rankOf)
    : base_(std::move(base)), rankOf_(std::move(rankOf)), edgeByRank_(base_.numEdges()) {
  auto const edges = base_.edges();
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < edges.size(); ++i)
    edgeByRank_[rankOf_[i]] = edges[i];
}

RankedTree rankEdges(WeightedTree tree) {
  auto const edges = tree.edges();
  struct Key {
    Weight w;
    std::uint32_t id;
  };
  std::vector<Key> keys(edges.size());
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < edges.size(); ++i)
    keys[i] = {edges[i].w, static_cast<std::uint32_t>(i)};
  kernels::sortUnique(keys.begin(), keys.end(), [](Key const &a, Key const &b) {
    if (a.w != b.w)
      return a.w > b.w;
    return a.id < b.id;
  });
  std::vector<EdgeRank> rankOf(edges.size());
#pragma omp parallel for schedule(static)
  for (std::size_t r = 0; r < keys.size(); ++r)
    rankOf[keys[r].id] = static_cast<EdgeRank>(r);
  return RankedTree(std::move(tree), std::move(rankOf));
}

IncidenceIndex buildIncidence(RankedTree const &tree) {
  auto const nv = tree.numVertices();
  auto const edges = tree.edgeByRank();
  bool const serial = omp_get_max_threads() == 1;
  IncidenceIndex inc;
  std::vector<std::size_t> degree(nv, 0);
  inc.maxIncident.assign(nv, kNoEdge);
  if (serial) {
    // Ranks ascend, so the last write is the maximum.
    for (std::size_t r = 0; r < edges.size(); ++r) {
      ++degree[edges[r].u];
      ++degree[edges[r].v];
      inc.maxIncident[edges[r].u] = inc.maxIncident[edges[r].v] = static_cast<EdgeRank>(r);
    }
  } else {
#pragma omp parallel for schedule(static)
    for (std::size_t r = 0; r < edges.size(); ++r) {
      for (VertexId x : {edges[r].u, edges[r].v}) {
#pragma omp atomic
        ++degree[x];
        kernels::atomicMax(inc.maxIncident[x], static_cast<EdgeRank>(r));
      }
    }
  }

  inc.offsets.assign(nv + 1, 0);
  auto const total =
      kernels::exclusiveScan<std::size_t>(degree, std::span(inc.offsets).first(nv));
  inc.offsets[nv] = total;

  inc.incident.resize(total);
  // Reuse the degree array as a fill cursor.
  auto &cursor = degree;
  std::copy(inc.offsets.begin(), inc.offsets.end() - 1, cursor.begin());
  if (serial) {
    // Filling in rank order leaves every list sorted.
    for (std::size_t r = 0; r < edges.size(); ++r) {
      inc.incident[cursor[edges[r].u]++] = static_cast<EdgeRank>(r);
      inc.incident[cursor[edges[r].v]++] = static_cast<EdgeRank>(r);
    }
    return inc;
  }
#pragma omp parallel for schedule(static)
  for (std::size_t r = 0; r < edges.size(); ++r) {
    for (VertexId x : {edges[r].u, edges[r].v}) {
      std::size_t slot;
#pragma omp atomic capture
      slot = cursor[x]++;
      inc.incident[slot] = static_cast<EdgeRank>(r);
    }
  }
#pragma omp parallel for schedule(dynamic, 1024)
  for (std::size_t v = 0; v < nv; ++v) {
    auto const first = inc.incident.begin() + inc.offsets[v];
    auto const last = inc.incident.begin() + inc.offsets[v + 1];
    if (last - first > 1)
      std::sort(first, last);
  }
  return inc;
}

} // namespace pandora
