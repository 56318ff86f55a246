// Command-line front end: gen | build | stats | verify | bench.
// Exit codes: 0 ok, 1 verification mismatch, 2 usage or IO error.

#include <pandora/analysis.hpp>
#include <pandora/expansion.hpp>
#include <pandora/kernels.hpp>
#include <pandora/oracles.hpp>
#include <pandora/points.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace pandora;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

enum class Algo { Pandora, BottomUp, TopDown };

std::map<std::string, Algo> const kAlgos{
    {"pandora", Algo::Pandora}, {"bottomup", Algo::BottomUp}, {"topdown", Algo::TopDown}};

Dendrogram construct(Algo algo, RankedTree const &tree) {
  switch (algo) {
  case Algo::Pandora:
    return pandora::pandora(tree);
  case Algo::BottomUp:
    return dendrogramBottomUp(tree);
  case Algo::TopDown:
    return dendrogramTopDown(tree);
  }
  throw std::logic_error("unknown algorithm");
}

double secondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Ranking plus dendrogram construction; input parsing is excluded.
std::pair<Dendrogram, double> timedBuild(Algo algo, WeightedTree tree) {
  auto const start = std::chrono::steady_clock::now();
  auto const ranked = rankEdges(std::move(tree));
  auto d = construct(algo, ranked);
  return {std::move(d), secondsSince(start)};
}

void writeFile(std::string const &path, auto &&writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw InputError("cannot write " + path);
  writer(out);
  if (!out)
    throw InputError("write failed for " + path);
}

struct GenArgs {
  std::string dist = "normal";
  std::size_t n = 1000;
  std::size_t dim = 2;
  std::uint64_t seed = 1;
  std::size_t minPts = 2;
  std::string mst = "boruvka";
  std::string output;
};

int runGen(GenArgs const &args) {
  auto const pc = genPoints(parseDistribution(args.dist), args.n, args.dim, args.seed);
  auto const tree = args.mst == "dense" ? mutualReachabilityMstDense(pc, args.minPts)
                                        : mutualReachabilityMst(pc, args.minPts);
  writeFile(args.output, [&](std::ostream &out) {
    out << "# mutual-reachability MST dist=" << args.dist << " n=" << args.n
        << " dim=" << args.dim << " seed=" << args.seed << " minpts=" << args.minPts << '\n';
    writeEdgeList(out, tree);
  });
  std::cout << "wrote " << tree.numEdges() << " edges to " << args.output << '\n';
  return 0;
}

struct BuildArgs {
  std::string input;
  std::string algo = "pandora";
  int threads = omp_get_max_threads();
  std::string output;
};

int runBuild(BuildArgs const &args) {
  kernels::ThreadLimit limit(args.threads);
  auto tree = loadEdgeListFile(args.input);
  auto const points = tree.numVertices();
  auto [d, seconds] = timedBuild(kAlgos.at(args.algo), std::move(tree));
  if (!args.output.empty())
    writeFile(args.output, [&](std::ostream &out) { writeDendrogram(out, d); });
  std::cout << "algo=" << args.algo << " threads=" << args.threads << " points=" << points
            << " seconds=" << seconds << " mpoints_per_sec="
            << (seconds > 0 ? throughput(points, seconds) : 0.0) << '\n';
  return 0;
}

struct StatsArgs {
  std::string input;
  std::string dendrogram;
  bool json = false;
};

int runStats(StatsArgs const &args) {
  auto const tree = rankEdges(loadEdgeListFile(args.input));
  auto const run = runPandora(tree);
  Dendrogram d = run.dendrogram;
  if (!args.dendrogram.empty()) {
    d = readDendrogramFile(args.dendrogram);
    if (d.numEdges() != tree.numEdges() || d.numVertices() != tree.numVertices())
      throw InputError("dendrogram size does not match the input tree");
  }
  auto const stats = computeStats(d, run.hierarchy);
  auto const levels = run.hierarchy.numLevels();
  auto const chains = countChains(run.chains);

  if (args.json) {
    nlohmann::json j;
    j["edges"] = stats.numEdges;
    j["vertices"] = tree.numVertices();
    j["height"] = stats.height;
    j["skewness_edges"] = stats.skewnessEdges;
    j["skewness_points"] = stats.skewnessPoints;
    j["chains"] = stats.chainCount;
    j["pandora_chains"] = chains;
    j["levels"] = levels;
    j["level_bound"] = levelBound(stats.numEdges);
    j["per_level"] = nlohmann::json::array();
    for (auto const &lc : stats.perLevel)
      j["per_level"].push_back(
          {{"alpha", lc.alpha}, {"leaf", lc.leaf}, {"chain", lc.chain}, {"survivors", lc.survivors}});
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "edges=" << stats.numEdges << '\n'
            << "vertices=" << tree.numVertices() << '\n'
            << "height=" << stats.height << '\n'
            << "skewness_edges=" << stats.skewnessEdges << '\n'
            << "skewness_points=" << stats.skewnessPoints << '\n'
            << "chains=" << stats.chainCount << '\n'
            << "pandora_chains=" << chains << '\n'
            << "levels=" << levels << '\n'
            << "level_bound=" << levelBound(stats.numEdges) << '\n';
  for (std::size_t k = 0; k < stats.perLevel.size(); ++k) {
    auto const &lc = stats.perLevel[k];
    std::cout << "level." << k << "=alpha:" << lc.alpha << ",leaf:" << lc.leaf
              << ",chain:" << lc.chain << ",survivors:" << lc.survivors << '\n';
  }
  return 0;
}

int runVerify(std::string const &a, std::string const &b) {
  auto const da = readDendrogramFile(a);
  auto const db = readDendrogramFile(b);
  if (auto diff = firstDifference(da, db)) {
    std::cout << "MISMATCH " << *diff << '\n';
    return kExitMismatch;
  }
  std::cout << "identical (" << da.numEdges() << " edges, " << da.numVertices() << " vertices)\n";
  return 0;
}

struct BenchArgs {
  std::string input;
  std::string algo = "pandora";
  std::vector<int> threads{1};
  int repeat = 5;
};

int runBench(BenchArgs const &args) {
  auto const tree = loadEdgeListFile(args.input);
  auto const algo = kAlgos.at(args.algo);
  auto const points = tree.numVertices();
  for (int t : args.threads) {
    kernels::ThreadLimit limit(t);
    std::vector<double> times;
    for (int r = 0; r < args.repeat; ++r)
      times.push_back(timedBuild(algo, tree).second);
    std::sort(times.begin(), times.end());
    double const median = times[times.size() / 2];
    std::cout << "algo=" << args.algo << " threads=" << t << " repeat=" << args.repeat
              << " median_seconds=" << median << " min_seconds=" << times.front()
              << " mpoints_per_sec=" << throughput(points, median) << '\n';
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Single-linkage dendrograms from minimum spanning trees"};
  app.require_subcommand(1);

  GenArgs gen;
  auto *genCmd = app.add_subcommand("gen", "Generate a mutual-reachability MST edge list");
  genCmd->add_option("--dist", gen.dist, "normal | uniform")
      ->check(CLI::IsMember({"normal", "uniform"}));
  genCmd->add_option("--n", gen.n, "Number of points")->check(CLI::Range(2ul, 1ul << 31));
  genCmd->add_option("--dim", gen.dim, "Dimension")->check(CLI::Range(kMinDim, kMaxDim));
  genCmd->add_option("--seed", gen.seed, "Random seed");
  genCmd->add_option("--minpts", gen.minPts, "Core distance neighbour count")
      ->check(CLI::Range(2ul, 1ul << 31));
  genCmd->add_option("--mst", gen.mst, "boruvka | dense")
      ->check(CLI::IsMember({"boruvka", "dense"}));
  genCmd->add_option("--output,-o", gen.output, "Edge list path")->required();

  BuildArgs build;
  auto *buildCmd = app.add_subcommand("build", "Construct a dendrogram");
  buildCmd->add_option("--input,-i", build.input, "Edge list path")->required();
  buildCmd->add_option("--algo", build.algo, "pandora | bottomup | topdown")
      ->check(CLI::IsMember({"pandora", "bottomup", "topdown"}));
  buildCmd->add_option("--threads", build.threads, "Upper bound on threads")
      ->check(CLI::Range(1, 4096));
  buildCmd->add_option("--output,-o", build.output, "Dendrogram path");

  StatsArgs stats;
  auto *statsCmd = app.add_subcommand("stats", "Dendrogram and contraction statistics");
  statsCmd->add_option("--input,-i", stats.input, "Edge list path")->required();
  statsCmd->add_option("--dendrogram", stats.dendrogram, "Use this dendrogram file");
  statsCmd->add_flag("--json", stats.json, "Emit JSON");

  std::string verifyA, verifyB;
  auto *verifyCmd = app.add_subcommand("verify", "Compare two dendrogram files");
  verifyCmd->add_option("--a", verifyA)->required();
  verifyCmd->add_option("--b", verifyB)->required();

  BenchArgs bench;
  std::string threadsList = "1";
  auto *benchCmd = app.add_subcommand("bench", "Median construction time per thread count");
  benchCmd->add_option("--input,-i", bench.input, "Edge list path")->required();
  benchCmd->add_option("--algo", bench.algo, "pandora | bottomup | topdown")
      ->check(CLI::IsMember({"pandora", "bottomup", "topdown"}));
  benchCmd->add_option("--threads-list", threadsList, "Comma-separated thread counts");
  benchCmd->add_option("--repeat", bench.repeat, "Runs per configuration")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*genCmd)
      return runGen(gen);
    if (*buildCmd)
      return runBuild(build);
    if (*statsCmd)
      return runStats(stats);
    if (*verifyCmd)
      return runVerify(verifyA, verifyB);
    if (*benchCmd) {
      bench.threads.clear();
      std::istringstream list(threadsList);
      for (std::string item; std::getline(list, item, ',');) {
        int t = 0;
        try {
          t = std::stoi(item);
        } catch (std::exception const &) {
          throw std::invalid_argument("bad thread count '" + item + "'");
        }
        if (t < 1)
          throw std::invalid_argument("thread count must be at least 1");
        bench.threads.push_back(t);
      }
      return runBench(bench);
    }
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
