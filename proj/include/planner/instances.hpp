#pragma once

#include <map>
#include <utility>
#include <vector>

#include "planner/agent.hpp"
#include "planner/parametric.hpp"

namespace planner {

// Two-branch demonstration graph: the biased agent plans one continuation at
// s, switches at the fork, and pays 26 against a shortest path of 20.
TaskGraph demo_graph();

// Procrastination chain: forward edges cost x, every node has an exit edge
// to t of cost c. The agent defers the exit exactly when (b-1)c > bx.
TaskGraph gen_akerlof(int n, const Cost& c, const Cost& x);

// Worst-case chain: free forward edges, exit at v_j costs mu^j. Requires the
// zero-cost flag. The agent walks the whole chain whenever beta*mu < 1.
TaskGraph gen_exponential(int n, const Rat& mu, bool allow_zero);

// Positive-cost variant: forward edges cost eps. Throws PrecisionViolation
// (naming the failing index) unless eps + beta*mu^(j+1) < mu^j for all j < n,
// which keeps the realized path identical to the zero-cost one.
TaskGraph gen_exponential_eps(int n, const Rat& mu, const Rat& eps, const Bias& bias);

// Week-by-project grid: node vij = i weeks done, j projects done. An edge
// drops k rows at drop_costs[k]. Reward is attached to the graph.
TaskGraph gen_course(int weeks, int projects, const std::vector<Cost>& drop_costs,
                     const Cost& reward);

// Interval Labels instance on the complete bipartite gadget; every one of
// the n^2 s-u_i-v_j-t paths is valid. Edge costs are placeholders (1).
struct LabeledInstance {
  TaskGraph g;
  std::map<std::pair<std::string, std::string>, Interval> labels;
  IntervalLabeling to_labeling(const CompiledGraph& cg) const;
};
LabeledInstance gen_bipartite_labels(int n);

// Costed bipartite gadget realizing n^2 distinct agent paths: the envelope
// at s breaks at i/n and the envelope at u_i breaks at (i-1)/n + j/n^2.
TaskGraph gen_bipartite_costs(int n);

// Deterministic random DAG for fuzzing: <= max_nodes nodes, integer and
// half-integer costs, pruned to s-t form.
TaskGraph random_dag(unsigned long long seed, int max_nodes);

}  // namespace planner
