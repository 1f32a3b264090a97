#pragma once

#include <string>
#include <utility>
#include <vector>

#include "planner/graph.hpp"

namespace planner {

// Present-bias parameter. beta must lie in (0, 1]; the agent scales every
// non-immediate cost by beta when evaluating a plan.
struct Bias {
  Rat beta;
  explicit Bias(Rat b) : beta(std::move(b)) {
    if (beta <= 0 || beta > 1) fail(Errc::parameter, "beta must be in (0, 1]");
  }
  Rat inv() const { return Rat(1) / beta; }  // b = beta^-1
};

struct PlanStep {
  std::string node;
  std::vector<std::string> plan;  // node, ..., t
  Cost biased_cost;
};

enum class Outcome { reached, abandoned };

// One run of the agent: the node sequence it actually walked, the plan it
// held at every decision node, and the cost it paid.
struct Traversal {
  std::vector<std::string> realized_path;
  std::vector<PlanStep> plans;
  Outcome outcome = Outcome::reached;
  std::string stopped_at;  // set when abandoned
  Cost total_cost;
};

// Biased plan selection at v: argmin over out-edges of c(v,w) + beta*d(w,t),
// earliest topological head on ties. The returned path follows the chosen
// edge and then the canonical shortest continuation.
std::pair<std::vector<std::string>, Cost> plan_at(const CompiledGraph& cg, const std::string& v,
                                                  const Bias& bias);
std::pair<std::vector<std::string>, Cost> plan_at(const TaskGraph& g, const std::string& v,
                                                  const Bias& bias);

Cost perceived_cost(const CompiledGraph& cg, const std::string& v, const Bias& bias);
Cost perceived_cost(const TaskGraph& g, const std::string& v, const Bias& bias);

// Fixed-goal model: replan at every node, follow the first edge of the plan,
// stop at t.
Traversal traverse_fixed_goal(const CompiledGraph& cg, const Bias& bias);
Traversal traverse_fixed_goal(const TaskGraph& g, const Bias& bias);

// Reward model: quit at v iff perceived_cost(v) > beta*r (continue on
// equality); otherwise identical edge choices to the fixed-goal walk.
Traversal traverse_with_reward(const CompiledGraph& cg, const Bias& bias, const Cost& r);
Traversal traverse_with_reward(const TaskGraph& g, const Bias& bias, const Cost& r);

Rat cost_ratio(const CompiledGraph& cg, const Bias& bias);
Rat cost_ratio(const TaskGraph& g, const Bias& bias);

namespace detail {

// Core walk with beta as a plain rational; beta = 0 is allowed here and
// means "minimize the immediate cost only" (the sweep limit at x = 0).
// Appends the realized node ids to out.
void realized_path_ids(const CompiledGraph& cg, const Rat& beta, std::vector<int>& out);

// int64 scan kernel for beta = p/q; requires cg.fast_ok and small p, q.
// Returns false when the magnitudes would overflow the guard bound.
bool realized_path_ids_fast(const CompiledGraph& cg, long long p, long long q,
                            std::vector<int>& out);

int plan_edge_at(const CompiledGraph& cg, int v, const Rat& beta);  // chosen edge index
Cost biased_cost_at(const CompiledGraph& cg, int v, const Rat& beta);

}  // namespace detail

}  // namespace planner
