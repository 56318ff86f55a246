#include <pandora/points.hpp>
#include <pandora/union_find.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>

namespace pandora {

Distribution parseDistribution(std::string const &name) {
  if (name == "normal")
    return Distribution::Normal;
  if (name == "uniform")
    return Distribution::Uniform;
  throw std::invalid_argument("unknown distribution '" + name + "' (normal|uniform)");
}

char const *toString(Distribution dist) {
  return dist == Distribution::Normal ? "normal" : "uniform";
}

PointCloud genPoints(Distribution dist, std::size_t n, std::size_t dim, std::uint64_t seed) {
  if (n < 2)
    throw std::invalid_argument("need at least two points");
  if (dim < kMinDim || dim > kMaxDim)
    throw std::invalid_argument("dimension must be in [2, 8]");
  PointCloud pc;
  pc.dim = dim;
  pc.distribution = dist;
  pc.seed = seed;
  pc.coords.resize(n * dim);
  std::mt19937_64 rng(seed);
  if (dist == Distribution::Normal) {
    std::normal_distribution<double> normal(0.0, 1.0);
    for (auto &x : pc.coords)
      x = normal(rng);
  } else {
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (auto &x : pc.coords)
      x = uniform(rng);
  }
  return pc;
}

PointCloud makePointCloud(std::size_t dim, std::vector<double> coords) {
  if (dim < kMinDim || dim > kMaxDim)
    throw std::invalid_argument("dimension must be in [2, 8]");
  if (coords.size() % dim != 0)
    throw std::invalid_argument("coordinate count is not a multiple of the dimension");
  for (double x : coords)
    if (!std::isfinite(x))
      throw std::invalid_argument("non-finite coordinate");
  PointCloud pc;
  pc.dim = dim;
  pc.coords = std::move(coords);
  return pc;
}

double euclidean(std::span<double const> a, std::span<double const> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double const d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

namespace {

void checkMinPts(PointCloud const &pc, std::size_t minPts) {
  if (minPts < 2 || minPts > pc.size())
    throw std::invalid_argument("minPts must be in [2, n]");
}

constexpr std::size_t kLeafSize = 16;

class KdTree {
public:
  struct Node {
    std::uint32_t begin = 0, end = 0;
    std::int32_t left = -1, right = -1;
    double minCore = 0.0;
    VertexId comp = kNoVertex;
  };

  explicit KdTree(PointCloud const &pc) : pc_(pc), dim_(pc.dim), perm_(pc.size()) {
    std::iota(perm_.begin(), perm_.end(), 0u);
    nodes_.reserve(2 * pc.size() / kLeafSize + 2);
    build(0, static_cast<std::uint32_t>(pc.size()));
  }

  std::size_t size() const { return nodes_.size(); }
  Node const &node(std::size_t i) const { return nodes_[i]; }

  /// Distance to the k-th nearest point, the query itself included.
  double kthNearest(std::size_t query, std::size_t k) const {
    auto const q = pc_.point(query);
    std::priority_queue<double> heap; // largest squared distance on top
    std::vector<std::int32_t> stack{0};
    while (!stack.empty()) {
      auto const id = stack.back();
      stack.pop_back();
      auto const &nd = nodes_[id];
      if (heap.size() == k && boxDist2(q, id) > heap.top())
        continue;
      if (nd.left < 0) {
        for (auto i = nd.begin; i < nd.end; ++i) {
          auto const p = pc_.point(perm_[i]);
          double d2 = 0.0;
          for (std::size_t j = 0; j < dim_; ++j)
            d2 += (p[j] - q[j]) * (p[j] - q[j]);
          if (heap.size() < k)
            heap.push(d2);
          else if (d2 < heap.top()) {
            heap.pop();
            heap.push(d2);
          }
        }
        continue;
      }
      auto near = nd.left, far = nd.right;
      if (boxDist2(q, near) > boxDist2(q, far))
        std::swap(near, far);
      stack.push_back(far);
      stack.push_back(near);
    }
    // Same summation order as euclidean(), so the value matches it exactly.
    return std::sqrt(heap.top());
  }

  void setCores(std::span<double const> core) {
    for (std::size_t id = nodes_.size(); id-- > 0;) {
      auto &nd = nodes_[id];
      if (nd.left < 0) {
        double m = std::numeric_limits<double>::infinity();
        for (auto i = nd.begin; i < nd.end; ++i)
          m = std::min(m, core[perm_[i]]);
        nd.minCore = m;
      } else {
        nd.minCore = std::min(nodes_[nd.left].minCore, nodes_[nd.right].minCore);
      }
    }
  }

  void setComponents(std::span<VertexId const> compOf) {
    for (std::size_t id = nodes_.size(); id-- > 0;) {
      auto &nd = nodes_[id];
      if (nd.left < 0) {
        VertexId c = compOf[perm_[nd.begin]];
        for (auto i = nd.begin + 1; i < nd.end && c != kNoVertex; ++i)
          if (compOf[perm_[i]] != c)
            c = kNoVertex;
        nd.comp = c;
      } else {
        auto const a = nodes_[nd.left].comp;
        nd.comp = a == nodes_[nd.right].comp ? a : kNoVertex;
      }
    }
  }

  std::uint32_t pointAt(std::uint32_t slot) const { return perm_[slot]; }

  double boxDist2(std::span<double const> q, std::int32_t id) const {
    auto const *lo = &lo_[id * dim_];
    auto const *hi = &hi_[id * dim_];
    double sum = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) {
      double const gap = q[j] < lo[j] ? lo[j] - q[j] : (q[j] > hi[j] ? q[j] - hi[j] : 0.0);
      sum += gap * gap;
    }
    return sum;
  }

private:
  std::int32_t build(std::uint32_t begin, std::uint32_t end) {
    auto const id = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back({begin, end});
    lo_.resize(nodes_.size() * dim_, std::numeric_limits<double>::infinity());
    hi_.resize(nodes_.size() * dim_, -std::numeric_limits<double>::infinity());
    for (auto i = begin; i < end; ++i) {
      auto const p = pc_.point(perm_[i]);
      for (std::size_t j = 0; j < dim_; ++j) {
        lo_[id * dim_ + j] = std::min(lo_[id * dim_ + j], p[j]);
        hi_[id * dim_ + j] = std::max(hi_[id * dim_ + j], p[j]);
      }
    }
    if (end - begin <= kLeafSize)
      return id;

    std::size_t axis = 0;
    double widest = -1.0;
    for (std::size_t j = 0; j < dim_; ++j) {
      double const w = hi_[id * dim_ + j] - lo_[id * dim_ + j];
      if (w > widest) {
        widest = w;
        axis = j;
      }
    }
    auto const mid = begin + (end - begin) / 2;
    std::nth_element(perm_.begin() + begin, perm_.begin() + mid, perm_.begin() + end,
                     [&](std::uint32_t a, std::uint32_t b) {
                       return pc_.coords[a * dim_ + axis] < pc_.coords[b * dim_ + axis];
                     });
    auto const left = build(begin, mid);
    auto const right = build(mid, end);
    nodes_[id].left = left;
    nodes_[id].right = right;
    return id;
  }

  PointCloud const &pc_;
  std::size_t dim_;
  std::vector<std::uint32_t> perm_;
  std::vector<Node> nodes_;
  std::vector<double> lo_, hi_;
};

// Candidate MST edge under the strict (weight, smaller id, larger id) order.
struct Candidate {
  double w = std::numeric_limits<double>::infinity();
  VertexId a = kNoVertex;
  VertexId b = kNoVertex;

  bool valid() const { return a != kNoVertex; }
  friend bool operator<(Candidate const &x, Candidate const &y) {
    if (x.w != y.w)
      return x.w < y.w;
    if (x.a != y.a)
      return x.a < y.a;
    return x.b < y.b;
  }
};

Candidate candidate(PointCloud const &pc, std::span<double const> core, VertexId p, VertexId q) {
  double const w = std::max({core[p], core[q], euclidean(pc.point(p), pc.point(q))});
  return {w, std::min(p, q), std::max(p, q)};
}

WeightedTree finishTree(std::size_t n, std::vector<Candidate> picked) {
  std::sort(picked.begin(), picked.end());
  std::vector<Edge> edges(picked.size());
  for (std::size_t i = 0; i < picked.size(); ++i)
    edges[i] = {picked[i].a, picked[i].b, picked[i].w, 0};
  return WeightedTree::fromEdges(n, std::move(edges));
}

} // namespace

std::vector<double> coreDistances(PointCloud const &pc, std::size_t minPts) {
  checkMinPts(pc, minPts);
  KdTree tree(pc);
  std::vector<double> core(pc.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::size_t i = 0; i < pc.size(); ++i)
    core[i] = tree.kthNearest(i, minPts);
  return core;
}

std::vector<double> coreDistancesBruteForce(PointCloud const &pc, std::size_t minPts) {
  checkMinPts(pc, minPts);
  auto const n = pc.size();
  std::vector<double> core(n), d2(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < pc.dim; ++k) {
        double const diff = pc.coords[j * pc.dim + k] - pc.coords[i * pc.dim + k];
        s += diff * diff;
      }
      d2[j] = s;
    }
    std::nth_element(d2.begin(), d2.begin() + (minPts - 1), d2.end());
    core[i] = std::sqrt(d2[minPts - 1]);
  }
  return core;
}

WeightedTree mutualReachabilityMst(PointCloud const &pc, std::size_t minPts) {
  checkMinPts(pc, minPts);
  auto const n = pc.size();
  auto const core = coreDistances(pc, minPts);
  KdTree tree(pc);
  tree.setCores(core);

  UnionFind uf(n);
  std::vector<VertexId> compOf(n);
  std::iota(compOf.begin(), compOf.end(), VertexId{0});
  std::vector<Candidate> picked;
  picked.reserve(n - 1);
  std::vector<Candidate> best(n);
  std::vector<std::int32_t> stack;

  while (picked.size() + 1 < n) {
    tree.setComponents(compOf);
    std::fill(best.begin(), best.end(), Candidate{});
    for (VertexId p = 0; p < n; ++p) {
      auto const c = compOf[p];
      auto &b = best[c];
      if (core[p] > b.w)
        continue;
      auto const q = pc.point(p);
      stack.assign(1, 0);
      while (!stack.empty()) {
        auto const id = stack.back();
        stack.pop_back();
        auto const &nd = tree.node(id);
        if (nd.comp == c)
          continue;
        double const lower =
            std::max({core[p], nd.minCore, std::sqrt(tree.boxDist2(q, id))});
        if (lower > b.w)
          continue;
        if (nd.left < 0) {
          for (auto i = nd.begin; i < nd.end; ++i) {
            auto const other = tree.pointAt(i);
            if (compOf[other] == c)
              continue;
            auto const cand = candidate(pc, core, p, other);
            if (cand < b)
              b = cand;
          }
          continue;
        }
        auto near = nd.left, far = nd.right;
        if (tree.boxDist2(q, near) > tree.boxDist2(q, far))
          std::swap(near, far);
        stack.push_back(far);
        stack.push_back(near);
      }
    }
    for (VertexId c = 0; c < n; ++c) {
      auto const &b = best[c];
      if (!b.valid() || uf.find(b.a) == uf.find(b.b))
        continue;
      uf.unite(b.a, b.b);
      picked.push_back(b);
    }
    for (VertexId p = 0; p < n; ++p)
      compOf[p] = uf.find(p);
  }
  return finishTree(n, std::move(picked));
}

WeightedTree mutualReachabilityMstDense(PointCloud const &pc, std::size_t minPts) {
  checkMinPts(pc, minPts);
  auto const n = pc.size();
  auto const core = coreDistancesBruteForce(pc, minPts);
  std::vector<char> inTree(n, 0);
  std::vector<Candidate> key(n);
  std::vector<Candidate> picked;
  picked.reserve(n - 1);

  VertexId added = 0;
  inTree[0] = 1;
  for (std::size_t step = 1; step < n; ++step) {
    VertexId next = kNoVertex;
    for (VertexId v = 0; v < n; ++v) {
      if (inTree[v])
        continue;
      auto const c = candidate(pc, core, added, v);
      if (c < key[v])
        key[v] = c;
      if (next == kNoVertex || key[v] < key[next])
        next = v;
    }
    inTree[next] = 1;
    picked.push_back(key[next]);
    added = next;
  }
  return finishTree(n, std::move(picked));
}

} // namespace pandora
