#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planner/error.hpp"
#include "planner/rational.hpp"

namespace planner {

using Cost = Rat;

struct Edge {
  std::string from, to;
  Cost cost;
};

// Directed acyclic task graph with exact rational edge costs, a start node s
// and a goal node t. Zero-cost edges are rejected unless allow_zero_cost is
// set. Parallel edges are always rejected; subdivide instead.
struct TaskGraph {
  std::vector<std::string> nodes;
  std::vector<Edge> edges;
  std::string s, t;
  std::optional<Cost> reward;  // instance files may carry a goal reward
  bool allow_zero_cost = false;
};

// Deterministic topological order: s first among sources, then node-id
// lexicographic among ties. Every tie-break in the library reduces to
// "earlier position in this order".
struct TopoOrder {
  std::vector<std::string> order;   // position -> node id
  std::map<std::string, int> pos;   // node id -> position
};

void validate(const TaskGraph& g);
TaskGraph prune_to_st(const TaskGraph& g);  // keep exactly the nodes on s-t paths
TopoOrder topo_order(const TaskGraph& g);
std::map<std::string, Cost> dist_to_t(const TaskGraph& g);  // exact d(v,t)

// Pruned, indexed view shared by every algorithm. Nodes are renumbered by
// topological position; out-arcs are sorted by head so a strict-min scan
// lands on the earliest head automatically. Edges are renumbered by
// (tail, head); this is the canonical edge order.
struct CompiledGraph {
  TaskGraph g;  // pruned copy, edges in canonical order
  std::vector<std::string> names;
  std::map<std::string, int> pos;
  int s = 0, t = 0;

  struct Arc {
    int head;
    int edge;
  };
  std::vector<std::vector<Arc>> out;  // by tail, heads ascending
  std::vector<int> tail, head;        // by edge index
  std::vector<Cost> dist;             // d(v,t)
  std::vector<int> canon_next;        // canonical shortest-path successor, -1 at t

  // Scaled int64 image of the costs for the scan kernels: cost*denom and
  // dist*denom, valid when every value fits comfortably (see fast_bound).
  bool fast_ok = false;
  long long denom = 1;
  std::vector<long long> cost_i, dist_i;
  static constexpr long long fast_bound = 1LL << 44;

  int node(const std::string& id) const;
  int edge_between(const std::string& from, const std::string& to) const;  // -1 if absent
  std::size_t edge_count() const { return g.edges.size(); }
  std::size_t node_count() const { return names.size(); }
};

// validate + prune + index. Idempotent on already pruned graphs.
CompiledGraph compile(const TaskGraph& g);

// Subgraph induced by a subset of edge indices (into g.edges); node set is
// kept, pruning happens at compile time.
TaskGraph subgraph_by_edges(const TaskGraph& g, const std::vector<int>& keep);

}  // namespace planner
