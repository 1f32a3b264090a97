#pragma once

#include <string>
#include <vector>

#include "planner/graph.hpp"
#include "planner/parametric.hpp"

namespace planner {

struct FuzzConfig {
  unsigned long long seed = 0;
  int count = 100;
  int max_nodes = 8;
  long resolution = 400;      // grid for the sweep-vs-simulation equivalence
  int search_max_edges = 10;  // exhaustive subgraph search only below this
  bool write_repro = true;
  std::string repro_prefix = "fuzz-repro";
  Exec exec = Exec::parallel;
};

struct FuzzResult {
  std::string report;
  int violations = 0;
};

// Deterministic corpus: instance i depends only on (seed, i, max_nodes).
std::vector<TaskGraph> fuzz_corpus(unsigned long long seed, int count, int max_nodes);

// Full invariant suite on one instance; returns human-readable failures.
std::vector<std::string> check_instance(const TaskGraph& g, const FuzzConfig& cfg);

FuzzResult run_fuzz(const FuzzConfig& cfg);

}  // namespace planner
