#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "planner/agent.hpp"

namespace planner {

// Smallest reward that carries the agent to t: b * (largest perceived cost
// along the fixed-goal walk). With the continue-on-equality rule the agent
// reaches t at exactly this reward.
struct MotivationReport {
  Cost min_reward;
  Cost peak_perceived;
  std::string argmax_node;              // first node attaining the peak
  std::vector<std::string> peak_nodes;  // every node attaining it
  Traversal trace;                      // reward-model run at min_reward
};
MotivationReport min_motivating_reward(const CompiledGraph& cg, const Bias& bias);
MotivationReport min_motivating_reward(const TaskGraph& g, const Bias& bias);

// Sparsity audit of a motivating subgraph against the agent's realized path
// ("trunk"): every edge must sit on the trunk or on a trunk-bypass, and no
// node may keep more than one off-trunk out-edge. Minimal motivating
// subgraphs always pass both.
struct StructureReport {
  std::vector<std::string> trunk;
  bool edges_covered = true;
  std::vector<std::pair<std::string, std::string>> uncovered_edges;
  bool out_degree_ok = true;
  std::vector<std::string> overloaded_nodes;
  bool pass() const { return edges_covered && out_degree_ok; }
};

struct SubgraphCert {
  TaskGraph sub;  // pruned motivating subgraph
  Traversal traversal;
  bool minimal = false;
  StructureReport structure;
};

struct SearchOptions {
  int max_edges = 16;  // exhaustive search bound; SizeLimit beyond it
};

// Exhaustive search over edge subsets, largest first, subsets of equal size
// in lexicographic order of their sorted edge-index lists. Subsets are
// pruned to s-t form before simulation and results are memoized on the
// surviving edge set.
std::optional<SubgraphCert> find_motivating_subgraph(const TaskGraph& g, const Bias& bias,
                                                     const Cost& r, SearchOptions opts = {});

// True iff deleting any single edge (and re-pruning) stops the agent from
// reaching t. Throws NotMotivating when the given subgraph does not motivate.
bool is_minimal_motivating(const TaskGraph& subgraph, const Bias& bias, const Cost& r);

// Greedy descent to a minimal motivating subgraph: repeatedly drop the first
// edge (canonical order) whose removal keeps the agent reaching t.
TaskGraph minimize_motivating(const TaskGraph& subgraph, const Bias& bias, const Cost& r);

// Computes the report above for a motivating subgraph.
StructureReport check_minimal_structure(const TaskGraph& subgraph, const Bias& bias,
                                        const Cost& r);

// Searches small rational-cost instances on the two-branch fork (s-a, a-b-t,
// a-c-t) for one where the whole graph motivates -- the agent starts out
// planning the b-branch and finishes through the c-branch -- but neither
// branch alone does. Returns the instance with its reward attached.
TaskGraph search_decoy_instance(const Bias& bias, int cost_bound = 8);

// Reusable subset-simulation kernel over one compiled graph (<= 64 edges):
// prune-within-mask, exact quit tests, int64 fast route with an overflow
// guard and an mpq fallback. The generic compile-per-subgraph route is the
// reference it is tested against.
class SubsetSim {
 public:
  SubsetSim(const CompiledGraph& cg, const Bias& bias, const Cost& r);

  uint64_t full_mask() const { return mask_all_; }
  // surviving edges after pruning to s-t form; 0 when no s-t path remains
  uint64_t prune(uint64_t mask);
  bool motivates(uint64_t mask);  // memoized on the pruned mask
  // realized node positions (empty when the agent never leaves s... it still
  // holds s) and whether t was reached
  bool realized(uint64_t mask, std::vector<int>& path_out);

  const CompiledGraph& graph() const { return cg_; }

 private:
  bool sim_fast(uint64_t mask, std::vector<int>* path_out, bool& ok);
  bool sim_exact(uint64_t mask, std::vector<int>* path_out);

  const CompiledGraph& cg_;
  Rat beta_, beta_r_;
  bool fast_ = false;
  long long bp_ = 0, bq_ = 1;
  __int128 quit_rhs_ = 0;  // bp * r_num * denom
  long long r_den_ = 1;
  uint64_t mask_all_ = 0;
  std::vector<long long> dist_i_;
  std::vector<Rat> dist_q_;
  std::vector<char> fwd_, bwd_;
  std::unordered_map<uint64_t, char> memo_;
};

}  // namespace planner
