#include "planner/agent.hpp"

namespace planner {

namespace detail {

int plan_edge_at(const CompiledGraph& cg, int v, const Rat& beta) {
  if (v == cg.t || cg.out[v].empty()) return -1;
  int best = -1;
  Rat best_val;
  for (const CompiledGraph::Arc& a : cg.out[v]) {
    Rat val = cg.g.edges[a.edge].cost + beta * cg.dist[a.head];
    if (best < 0 || val < best_val) {
      best = a.edge;
      best_val = val;
    }
  }
  return best;
}

Cost biased_cost_at(const CompiledGraph& cg, int v, const Rat& beta) {
  int e = plan_edge_at(cg, v, beta);
  if (e < 0) return Rat(0);
  return cg.g.edges[e].cost + beta * cg.dist[cg.head[e]];
}

void realized_path_ids(const CompiledGraph& cg, const Rat& beta, std::vector<int>& out) {
  out.clear();
  int v = cg.s;
  out.push_back(v);
  while (v != cg.t) {
    int e = plan_edge_at(cg, v, beta);
    v = cg.head[e];
    out.push_back(v);
  }
}

bool realized_path_ids_fast(const CompiledGraph& cg, long long p, long long q,
                            std::vector<int>& out) {
  if (!cg.fast_ok || p < 0 || q <= 0 || p > CompiledGraph::fast_bound ||
      q > CompiledGraph::fast_bound)
    return false;
  out.clear();
  int v = cg.s;
  out.push_back(v);
  // value of edge e at beta scaled by denom*q: cost_i[e]*q + p*dist_i[head]
  while (v != cg.t) {
    int best = -1;
    __int128 best_val = 0;
    for (const CompiledGraph::Arc& a : cg.out[v]) {
      __int128 val = static_cast<__int128>(cg.cost_i[a.edge]) * q +
                     static_cast<__int128>(p) * cg.dist_i[a.head];
      if (best < 0 || val < best_val) {
        best = a.edge;
        best_val = val;
      }
    }
    v = cg.head[best];
    out.push_back(v);
  }
  return true;
}

}  // namespace detail

namespace {

std::vector<std::string> plan_path_from(const CompiledGraph& cg, int v, int chosen_edge) {
  std::vector<std::string> path{cg.names[v]};
  if (chosen_edge < 0) return path;
  int w = cg.head[chosen_edge];
  path.push_back(cg.names[w]);
  while (w != cg.t) {
    w = cg.canon_next[w];
    path.push_back(cg.names[w]);
  }
  return path;
}

Traversal walk(const CompiledGraph& cg, const Bias& bias, const Cost* reward) {
  Traversal tr;
  tr.total_cost = 0;
  int v = cg.s;
  tr.realized_path.push_back(cg.names[v]);
  while (v != cg.t) {
    int e = detail::plan_edge_at(cg, v, bias.beta);
    Cost biased = cg.g.edges[e].cost + bias.beta * cg.dist[cg.head[e]];
    tr.plans.push_back({cg.names[v], plan_path_from(cg, v, e), biased});
    if (reward != nullptr && biased > bias.beta * *reward) {
      tr.outcome = Outcome::abandoned;
      tr.stopped_at = cg.names[v];
      return tr;
    }
    tr.total_cost += cg.g.edges[e].cost;
    v = cg.head[e];
    tr.realized_path.push_back(cg.names[v]);
  }
  tr.outcome = Outcome::reached;
  return tr;
}

}  // namespace

std::pair<std::vector<std::string>, Cost> plan_at(const CompiledGraph& cg, const std::string& v,
                                                  const Bias& bias) {
  int vid = cg.node(v);
  int e = detail::plan_edge_at(cg, vid, bias.beta);
  Cost biased = e < 0 ? Rat(0) : cg.g.edges[e].cost + bias.beta * cg.dist[cg.head[e]];
  return {plan_path_from(cg, vid, e), biased};
}

Cost perceived_cost(const CompiledGraph& cg, const std::string& v, const Bias& bias) {
  return detail::biased_cost_at(cg, cg.node(v), bias.beta);
}

Traversal traverse_fixed_goal(const CompiledGraph& cg, const Bias& bias) {
  return walk(cg, bias, nullptr);
}

Traversal traverse_with_reward(const CompiledGraph& cg, const Bias& bias, const Cost& r) {
  return walk(cg, bias, &r);
}

Rat cost_ratio(const CompiledGraph& cg, const Bias& bias) {
  if (cg.dist[cg.s] == 0)
    fail(Errc::zero_shortest_path, "cost ratio undefined: d(s,t) = 0");
  Traversal tr = traverse_fixed_goal(cg, bias);
  return tr.total_cost / cg.dist[cg.s];
}

namespace {

// Nodes pruned away cannot reach t (or are unreachable); report that as
// NoPath rather than an unknown id when the caller's graph knows the node.
void require_surviving(const TaskGraph& g, const CompiledGraph& cg, const std::string& v) {
  if (cg.pos.count(v)) return;
  for (const auto& n : g.nodes)
    if (n == v) fail(Errc::no_path, "node " + v + " lies on no s-t path");
  fail(Errc::parameter, "unknown node: " + v);
}

}  // namespace

std::pair<std::vector<std::string>, Cost> plan_at(const TaskGraph& g, const std::string& v,
                                                  const Bias& bias) {
  CompiledGraph cg = compile(g);
  require_surviving(g, cg, v);
  return plan_at(cg, v, bias);
}
Cost perceived_cost(const TaskGraph& g, const std::string& v, const Bias& bias) {
  CompiledGraph cg = compile(g);
  require_surviving(g, cg, v);
  return perceived_cost(cg, v, bias);
}
Traversal traverse_fixed_goal(const TaskGraph& g, const Bias& bias) {
  return traverse_fixed_goal(compile(g), bias);
}
Traversal traverse_with_reward(const TaskGraph& g, const Bias& bias, const Cost& r) {
  return traverse_with_reward(compile(g), bias, r);
}
Rat cost_ratio(const TaskGraph& g, const Bias& bias) { return cost_ratio(compile(g), bias); }

}  // namespace planner
