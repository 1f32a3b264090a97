// Timing harness: exact-rational reference walks vs the int64 scan kernel,
// and the sweep against the grid oracle, over a fuzz corpus.
#include <chrono>
#include <cstdio>

#include "planner/agent.hpp"
#include "planner/fuzz.hpp"
#include "planner/instances.hpp"
#include "planner/motivation.hpp"

using namespace planner;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int count = argc > 1 ? std::atoi(argv[1]) : 50;
  long resolution = argc > 2 ? std::atol(argv[2]) : 2000;

  std::vector<TaskGraph> corpus = fuzz_corpus(0, count, 10);
  std::vector<CompiledGraph> compiled;
  compiled.reserve(corpus.size());
  for (const TaskGraph& g : corpus) compiled.push_back(compile(g));

  std::printf("corpus: %d instances, resolution %ld\n", count, resolution);

  // realized-path walks: exact mpq vs int64 kernel
  {
    std::vector<int> buf;
    long walks = 0;
    auto t0 = Clock::now();
    for (const CompiledGraph& cg : compiled)
      for (long k = 1; k <= resolution; ++k) {
        detail::realized_path_ids(cg, Rat(k, resolution), buf);
        ++walks;
      }
    double exact_ms = ms_since(t0);

    long fast_walks = 0;
    t0 = Clock::now();
    for (const CompiledGraph& cg : compiled)
      for (long k = 1; k <= resolution; ++k)
        if (detail::realized_path_ids_fast(cg, k, resolution, buf)) ++fast_walks;
    double fast_ms = ms_since(t0);
    std::printf("agent walks     exact: %8.1f ms (%ld)   int64 kernel: %8.1f ms (%ld)  x%.1f\n",
                exact_ms, walks, fast_ms, fast_walks, exact_ms / fast_ms);
  }

  // sweep enumeration vs grid oracle
  {
    auto t0 = Clock::now();
    std::size_t total = 0;
    for (const CompiledGraph& cg : compiled) total += enumerate_beta_paths(cg).paths.size();
    double sweep_ms = ms_since(t0);

    t0 = Clock::now();
    std::size_t total2 = 0;
    for (const CompiledGraph& cg : compiled)
      total2 += brute_force_beta_paths(cg, resolution, Exec::serial).size();
    double serial_ms = ms_since(t0);

    t0 = Clock::now();
    std::size_t total3 = 0;
    for (const CompiledGraph& cg : compiled)
      total3 += brute_force_beta_paths(cg, resolution, Exec::parallel).size();
    double par_ms = ms_since(t0);
    std::printf("path sets       sweep: %8.1f ms (%zu)   grid serial: %8.1f ms (%zu)   grid omp: %8.1f ms (%zu)\n",
                sweep_ms, total, serial_ms, total2, par_ms, total3);
  }

  // subgraph minimization through the subset kernel
  {
    Bias bias{Rat(1, 2)};
    auto t0 = Clock::now();
    int minimal = 0;
    for (const CompiledGraph& cg : compiled) {
      MotivationReport rep = min_motivating_reward(cg, bias);
      TaskGraph m = minimize_motivating(cg.g, bias, rep.min_reward);
      minimal += static_cast<int>(m.edges.size());
    }
    std::printf("greedy minimal subgraphs: %8.1f ms (%d edges kept)\n", ms_since(t0), minimal);
  }
  return 0;
}
