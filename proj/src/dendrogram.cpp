#include <pandora/dendrogram.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace pandora {

namespace {

std::string showParent(EdgeRank p) { return p == kNoEdge ? "-1" : std::to_string(p); }

} // namespace

std::optional<std::string> firstDifference(Dendrogram const &a, Dendrogram const &b) {
  if (a.numEdges() != b.numEdges())
    return "edge counts differ: " + std::to_string(a.numEdges()) + " vs " +
           std::to_string(b.numEdges());
  if (a.numVertices() != b.numVertices())
    return "vertex counts differ: " + std::to_string(a.numVertices()) + " vs " +
           std::to_string(b.numVertices());
  for (std::size_t e = 0; e < a.numEdges(); ++e)
    if (a.edgeParent[e] != b.edgeParent[e])
      return "edge " + std::to_string(e) + ": parent " + showParent(a.edgeParent[e]) +
             " vs " + showParent(b.edgeParent[e]);
  for (std::size_t v = 0; v < a.numVertices(); ++v)
    if (a.vertexParent[v] != b.vertexParent[v])
      return "vertex " + std::to_string(v) + ": parent " + showParent(a.vertexParent[v]) +
             " vs " + showParent(b.vertexParent[v]);
  return std::nullopt;
}

void writeDendrogram(std::ostream &out, Dendrogram const &d) {
  std::string buf;
  buf.reserve(16 * (d.numEdges() + d.numVertices()) + 64);
  buf += "#dendrogram v1 n=" + std::to_string(d.numEdges()) +
         " nv=" + std::to_string(d.numVertices()) + "\n";
  for (std::size_t e = 0; e < d.numEdges(); ++e) {
    buf += "E ";
    buf += std::to_string(e);
    buf += ' ';
    buf += showParent(d.edgeParent[e]);
    buf += '\n';
  }
  for (std::size_t v = 0; v < d.numVertices(); ++v) {
    buf += "V ";
    buf += std::to_string(v);
    buf += ' ';
    buf += showParent(d.vertexParent[v]);
    buf += '\n';
  }
  out << buf;
}

Dendrogram readDendrogram(std::istream &in) {
  std::string line;
  if (!std::getline(in, line))
    throw InputError("empty dendrogram file");
  std::size_t n = 0, nv = 0;
  {
    std::istringstream header(line);
    std::string tag, version, ns, nvs;
    if (!(header >> tag >> version >> ns >> nvs) || tag != "#dendrogram" || version != "v1" ||
        ns.rfind("n=", 0) != 0 || nvs.rfind("nv=", 0) != 0)
      throw InputError("bad dendrogram header: " + line);
    try {
      n = std::stoull(ns.substr(2));
      nv = std::stoull(nvs.substr(3));
    } catch (std::exception const &) {
      throw InputError("bad dendrogram header: " + line);
    }
  }

  Dendrogram d;
  d.edgeParent.assign(n, kNoEdge);
  d.vertexParent.assign(nv, kNoEdge);
  std::vector<char> seenE(n, 0), seenV(nv, 0);
  std::size_t lineNo = 1;
  while (std::getline(in, line)) {
    ++lineNo;
    if (line.empty())
      continue;
    std::istringstream fields(line);
    std::string kind;
    long long id = 0, parent = 0;
    if (!(fields >> kind >> id >> parent) || (kind != "E" && kind != "V"))
      throw InputError("line " + std::to_string(lineNo) + ": expected 'E|V <id> <parent>'");
    bool const isEdge = kind == "E";
    auto const limit = isEdge ? n : nv;
    if (id < 0 || static_cast<std::size_t>(id) >= limit || parent < -1 ||
        parent >= static_cast<long long>(n))
      throw InputError("line " + std::to_string(lineNo) + ": id out of range");
    auto &seen = isEdge ? seenE : seenV;
    if (seen[id])
      throw InputError("line " + std::to_string(lineNo) + ": repeated entry");
    seen[id] = 1;
    (isEdge ? d.edgeParent : d.vertexParent)[id] =
        parent < 0 ? kNoEdge : static_cast<EdgeRank>(parent);
  }
  for (auto s : seenE)
    if (!s)
      throw InputError("dendrogram file is missing edge entries");
  for (auto s : seenV)
    if (!s)
      throw InputError("dendrogram file is missing vertex entries");
  return d;
}

Dendrogram readDendrogramFile(std::string const &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open " + path);
  return readDendrogram(in);
}

std::vector<std::uint8_t> vertexChildCounts(Dendrogram const &d) {
  std::vector<std::uint8_t> counts(d.numEdges(), 0);
  for (auto p : d.vertexParent)
    if (p != kNoEdge && p < counts.size())
      ++counts[p];
  return counts;
}

std::optional<std::string> validateDendrogram(Dendrogram const &d) {
  auto const n = d.numEdges();
  if (n == 0)
    return "no edges";
  if (d.numVertices() != n + 1)
    return "vertex count is not edge count + 1";
  std::vector<std::uint32_t> children(n, 0);
  std::size_t roots = 0;
  for (std::size_t e = 0; e < n; ++e) {
    auto const p = d.edgeParent[e];
    if (p == kNoEdge) {
      ++roots;
      if (e != 0)
        return "edge " + std::to_string(e) + " is a root but is not rank 0";
      continue;
    }
    if (p >= e)
      return "edge " + std::to_string(e) + " has parent " + std::to_string(p) +
             " that is not heavier";
    ++children[p];
  }
  if (roots != 1)
    return "expected exactly one root, found " + std::to_string(roots);
  for (std::size_t v = 0; v < d.numVertices(); ++v) {
    auto const p = d.vertexParent[v];
    if (p == kNoEdge || p >= n)
      return "vertex " + std::to_string(v) + " has no valid parent";
    ++children[p];
  }
  for (std::size_t e = 0; e < n; ++e)
    if (children[e] != 2)
      return "edge " + std::to_string(e) + " has " + std::to_string(children[e]) + " children";
  return std::nullopt;
}

} // namespace pandora
