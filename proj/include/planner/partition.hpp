#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <vector>

#include "planner/graph.hpp"

namespace planner {

// The optimal split points involve k-th roots, so the optimizer works in
// 50-digit floats; everything expressible in rationals stays exact.
using Float = boost::multiprecision::cpp_bin_float_50;

Float to_float(const Rat& r);

// Exact per-step quit thresholds for a population of agents facing steps
// c_1..c_k and reward r: step i is taken iff beta >= c_i / (r - sum_{j>i} c_j).
std::vector<Rat> bottlenecks(const std::vector<Cost>& steps, const Cost& r);

// Fraction of a Uniform[0,1] beta population finishing every step.
Rat completion_rate(const std::vector<Cost>& steps, const Cost& r);

struct PartitionPlan {
  Cost total, reward;
  std::vector<Float> steps;
  std::vector<Float> step_bottlenecks;
  Float rate = 0;
};

// Closed form: first step delta^((k-1)/k) * r^(1/k) - delta, remainder split
// optimally into k-1; all bottlenecks equal and the rate is (1-c/r)^(1/k).
PartitionPlan optimal_partition(const Cost& c, const Cost& r, int k);

// Independent numeric route: bisect on the shared bottleneck value, growing
// steps forward greedily until their total matches c. Never touches the
// closed form.
PartitionPlan numeric_oracle_partition(const Cost& c, const Cost& r, int k);

// Chain task graph with one edge per step; simulating it reproduces the
// bottleneck thresholds exactly.
TaskGraph chain_graph(const std::vector<Cost>& steps);

}  // namespace planner
