#include "planner/motivation.hpp"

#include <algorithm>
#include <set>

namespace planner {

MotivationReport min_motivating_reward(const CompiledGraph& cg, const Bias& bias) {
  Traversal walk = traverse_fixed_goal(cg, bias);
  MotivationReport rep;
  rep.peak_perceived = 0;
  for (const PlanStep& step : walk.plans)
    if (step.biased_cost > rep.peak_perceived) rep.peak_perceived = step.biased_cost;
  for (const PlanStep& step : walk.plans)
    if (step.biased_cost == rep.peak_perceived) rep.peak_nodes.push_back(step.node);
  rep.argmax_node = rep.peak_nodes.empty() ? cg.names[cg.s] : rep.peak_nodes.front();
  rep.min_reward = rep.peak_perceived * bias.inv();
  rep.trace = traverse_with_reward(cg, bias, rep.min_reward);
  return rep;
}

MotivationReport min_motivating_reward(const TaskGraph& g, const Bias& bias) {
  return min_motivating_reward(compile(g), bias);
}

// ---------------------------------------------------------------------------
// SubsetSim

SubsetSim::SubsetSim(const CompiledGraph& cg, const Bias& bias, const Cost& r)
    : cg_(cg), beta_(bias.beta), beta_r_(bias.beta * r) {
  const std::size_t m = cg.g.edges.size();
  if (m > 64) fail(Errc::size_limit, "SubsetSim handles at most 64 edges");
  mask_all_ = m == 64 ? ~uint64_t(0) : ((uint64_t(1) << m) - 1);
  dist_i_.assign(cg.names.size(), 0);
  dist_q_.assign(cg.names.size(), Rat(0));
  fwd_.assign(cg.names.size(), 0);
  bwd_.assign(cg.names.size(), 0);

  // int64 route only when every operand stays far from overflow
  constexpr long long guard = 1LL << 38;
  auto bp = to_i64(beta_.get_num()), bq = to_i64(beta_.get_den());
  auto rn = to_i64(r.get_num()), rd = to_i64(r.get_den());
  if (cg.fast_ok && bp && bq && rn && rd && *bp < guard && *bq < guard && *rn < guard &&
      *rd < guard && *rn >= 0 && cg.denom < guard) {
    fast_ = true;
    for (long long c : cg.cost_i)
      if (c >= guard) fast_ = false;
    bp_ = *bp;
    bq_ = *bq;
    r_den_ = *rd;
    quit_rhs_ = static_cast<__int128>(bp_) * *rn * cg.denom;
  }
}

uint64_t SubsetSim::prune(uint64_t mask) {
  const int n = static_cast<int>(cg_.names.size());
  std::fill(fwd_.begin(), fwd_.end(), 0);
  std::fill(bwd_.begin(), bwd_.end(), 0);
  fwd_[cg_.s] = 1;
  for (int v = 0; v < n; ++v) {
    if (!fwd_[v]) continue;
    for (const CompiledGraph::Arc& a : cg_.out[v])
      if (mask >> a.edge & 1) fwd_[a.head] = 1;
  }
  if (!fwd_[cg_.t]) return 0;
  bwd_[cg_.t] = 1;
  for (int v = n - 1; v >= 0; --v)
    for (const CompiledGraph::Arc& a : cg_.out[v])
      if ((mask >> a.edge & 1) && bwd_[a.head]) bwd_[v] = 1;
  uint64_t kept = 0;
  for (int e = 0; e < static_cast<int>(cg_.g.edges.size()); ++e)
    if ((mask >> e & 1) && fwd_[cg_.tail[e]] && bwd_[cg_.head[e]]) kept |= uint64_t(1) << e;
  return kept;
}

bool SubsetSim::sim_fast(uint64_t mask, std::vector<int>* path_out, bool& ok) {
  constexpr long long guard = 1LL << 38;
  constexpr long long inf = 1LL << 60;
  const int n = static_cast<int>(cg_.names.size());
  // dist within the subgraph, scaled by cg_.denom
  for (int v = n - 1; v >= 0; --v) {
    if (v == cg_.t) {
      dist_i_[v] = 0;
      continue;
    }
    long long best = inf;
    for (const CompiledGraph::Arc& a : cg_.out[v]) {
      if (!(mask >> a.edge & 1)) continue;
      if (dist_i_[a.head] >= inf) continue;
      long long via = cg_.cost_i[a.edge] + dist_i_[a.head];
      if (via < best) best = via;
    }
    if (best < inf && best >= guard) {
      ok = false;  // magnitudes left the guarded range; caller retries exactly
      return false;
    }
    dist_i_[v] = best;
  }
  ok = true;
  int v = cg_.s;
  if (path_out) path_out->push_back(v);
  while (v != cg_.t) {
    int best_edge = -1;
    __int128 best_val = 0;
    for (const CompiledGraph::Arc& a : cg_.out[v]) {
      if (!(mask >> a.edge & 1) || dist_i_[a.head] >= inf) continue;
      __int128 val = static_cast<__int128>(cg_.cost_i[a.edge]) * bq_ +
                     static_cast<__int128>(bp_) * dist_i_[a.head];
      if (best_edge < 0 || val < best_val) {
        best_edge = a.edge;
        best_val = val;
      }
    }
    if (best_edge < 0) return false;  // no plan: quit
    // quit iff perceived > beta*r:  (best_val / (denom*bq)) > bp*rn/(bq*rd)
    if (best_val * r_den_ > quit_rhs_) return false;
    v = cg_.head[best_edge];
    if (path_out) path_out->push_back(v);
  }
  return true;
}

bool SubsetSim::sim_exact(uint64_t mask, std::vector<int>* path_out) {
  const int n = static_cast<int>(cg_.names.size());
  std::vector<char> have(n, 0);
  have[cg_.t] = 1;
  dist_q_[cg_.t] = 0;
  for (int v = n - 1; v >= 0; --v) {
    if (v == cg_.t) continue;
    bool first = true;
    for (const CompiledGraph::Arc& a : cg_.out[v]) {
      if (!(mask >> a.edge & 1) || !have[a.head]) continue;
      Rat via = cg_.g.edges[a.edge].cost + dist_q_[a.head];
      if (first || via < dist_q_[v]) {
        dist_q_[v] = via;
        first = false;
      }
    }
    have[v] = !first;
  }
  int v = cg_.s;
  if (path_out) path_out->push_back(v);
  while (v != cg_.t) {
    int best_edge = -1;
    Rat best_val;
    for (const CompiledGraph::Arc& a : cg_.out[v]) {
      if (!(mask >> a.edge & 1) || !have[a.head]) continue;
      Rat val = cg_.g.edges[a.edge].cost + beta_ * dist_q_[a.head];
      if (best_edge < 0 || val < best_val) {
        best_edge = a.edge;
        best_val = val;
      }
    }
    if (best_edge < 0 || best_val > beta_r_) return false;
    v = cg_.head[best_edge];
    if (path_out) path_out->push_back(v);
  }
  return true;
}

bool SubsetSim::motivates(uint64_t mask) {
  uint64_t kept = prune(mask);
  if (kept == 0) return false;
  auto it = memo_.find(kept);
  if (it != memo_.end()) return it->second;
  bool ok = true;
  bool reached = fast_ ? sim_fast(kept, nullptr, ok) : false;
  if (!fast_ || !ok) reached = sim_exact(kept, nullptr);
  memo_[kept] = reached;
  return reached;
}

bool SubsetSim::realized(uint64_t mask, std::vector<int>& path_out) {
  path_out.clear();
  uint64_t kept = prune(mask);
  if (kept == 0) {
    path_out.push_back(cg_.s);
    return false;
  }
  return sim_exact(kept, &path_out);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> mask_to_indices(uint64_t mask) {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if (mask >> i & 1) out.push_back(i);
  return out;
}

Traversal traversal_in_subgraph(const TaskGraph& sub, const Bias& bias, const Cost& r) {
  return traverse_with_reward(compile(sub), bias, r);
}

bool subgraph_motivates(const TaskGraph& sub, const Bias& bias, const Cost& r) {
  try {
    return traversal_in_subgraph(sub, bias, r).outcome == Outcome::reached;
  } catch (const Error& e) {
    if (e.code() == Errc::no_path) return false;
    throw;
  }
}

}  // namespace

std::optional<SubgraphCert> find_motivating_subgraph(const TaskGraph& g, const Bias& bias,
                                                     const Cost& r, SearchOptions opts) {
  CompiledGraph cg = compile(g);
  const int m = static_cast<int>(cg.g.edges.size());
  if (m > opts.max_edges)
    fail(Errc::size_limit, "subgraph search limited to " + std::to_string(opts.max_edges) +
                               " edges (instance has " + std::to_string(m) + ")");
  SubsetSim sim(cg, bias, r);

  // largest subsets first; within a size, lexicographic on index lists
  for (int size = m; size >= 1; --size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      uint64_t mask = 0;
      for (int i : pick) mask |= uint64_t(1) << i;
      if (sim.motivates(mask)) {
        uint64_t kept = sim.prune(mask);
        TaskGraph sub = prune_to_st(subgraph_by_edges(cg.g, mask_to_indices(kept)));
        SubgraphCert cert;
        cert.traversal = traversal_in_subgraph(sub, bias, r);
        cert.minimal = is_minimal_motivating(sub, bias, r);
        cert.structure = check_minimal_structure(sub, bias, r);
        cert.sub = std::move(sub);
        return cert;
      }
      // next combination
      int i = size - 1;
      while (i >= 0 && pick[i] == m - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

bool is_minimal_motivating(const TaskGraph& subgraph, const Bias& bias, const Cost& r) {
  if (subgraph.edges.size() > 64) {
    // generic route for oversized inputs
    if (!subgraph_motivates(subgraph, bias, r))
      fail(Errc::not_motivating, "subgraph does not motivate the agent at reward " + rat_str(r));
    for (std::size_t drop = 0; drop < subgraph.edges.size(); ++drop) {
      std::vector<int> keep;
      for (std::size_t i = 0; i < subgraph.edges.size(); ++i)
        if (i != drop) keep.push_back(static_cast<int>(i));
      if (subgraph_motivates(subgraph_by_edges(subgraph, keep), bias, r)) return false;
    }
    return true;
  }
  CompiledGraph cg = compile(subgraph);
  SubsetSim sim(cg, bias, r);
  if (!sim.motivates(sim.full_mask()))
    fail(Errc::not_motivating, "subgraph does not motivate the agent at reward " + rat_str(r));
  for (int e = 0; e < static_cast<int>(cg.g.edges.size()); ++e)
    if (sim.motivates(sim.full_mask() & ~(uint64_t(1) << e))) return false;
  return true;
}

TaskGraph minimize_motivating(const TaskGraph& subgraph, const Bias& bias, const Cost& r) {
  CompiledGraph cg = compile(subgraph);
  if (cg.g.edges.size() > 64) fail(Errc::size_limit, "minimize handles at most 64 edges");
  SubsetSim sim(cg, bias, r);
  uint64_t cur = sim.full_mask();
  if (!sim.motivates(cur))
    fail(Errc::not_motivating, "subgraph does not motivate the agent at reward " + rat_str(r));
  cur = sim.prune(cur);
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    for (int e = 0; e < static_cast<int>(cg.g.edges.size()); ++e) {
      if (!(cur >> e & 1)) continue;
      uint64_t candidate = cur & ~(uint64_t(1) << e);
      if (sim.motivates(candidate)) {
        cur = sim.prune(candidate);
        shrunk = true;
        break;
      }
    }
  }
  return prune_to_st(subgraph_by_edges(cg.g, mask_to_indices(cur)));
}

StructureReport check_minimal_structure(const TaskGraph& subgraph, const Bias& bias,
                                        const Cost& r) {
  CompiledGraph cg = compile(subgraph);
  Traversal walk = traverse_with_reward(cg, bias, r);
  if (walk.outcome != Outcome::reached)
    fail(Errc::not_motivating, "structure report needs a motivating subgraph");

  StructureReport rep;
  rep.trunk = walk.realized_path;
  std::set<std::string> on_trunk(walk.realized_path.begin(), walk.realized_path.end());
  std::set<std::pair<std::string, std::string>> trunk_edges;
  for (std::size_t i = 0; i + 1 < walk.realized_path.size(); ++i)
    trunk_edges.insert({walk.realized_path[i], walk.realized_path[i + 1]});

  // nodes reachable from the trunk / reaching the trunk through off-trunk
  // interiors; an off-trunk edge lies on a trunk-bypass iff its tail is
  // trunk-or-reachable and its head is trunk-or-reaching (DAG: the
  // concatenation is automatically a simple path)
  const int n = static_cast<int>(cg.names.size());
  std::vector<char> is_trunk(n, 0), from_trunk(n, 0), to_trunk(n, 0);
  for (const auto& name : walk.realized_path) is_trunk[cg.node(name)] = 1;
  for (int v = 0; v < n; ++v)
    for (const CompiledGraph::Arc& a : cg.out[v]) {
      if (is_trunk[a.head]) continue;
      if (is_trunk[v] || from_trunk[v]) from_trunk[a.head] = 1;
    }
  for (int v = n - 1; v >= 0; --v)
    for (const CompiledGraph::Arc& a : cg.out[v]) {
      if (is_trunk[v]) continue;
      if (is_trunk[a.head] || to_trunk[a.head]) to_trunk[v] = 1;
    }

  std::map<std::string, int> off_out;
  for (const Edge& e : cg.g.edges) {
    if (trunk_edges.count({e.from, e.to})) continue;
    off_out[e.from]++;
    int tail = cg.node(e.from), head = cg.node(e.to);
    bool covered = (is_trunk[tail] || from_trunk[tail]) && (is_trunk[head] || to_trunk[head]);
    if (!covered) {
      rep.edges_covered = false;
      rep.uncovered_edges.push_back({e.from, e.to});
    }
  }
  for (const auto& [node, deg] : off_out)
    if (deg > 1) {
      rep.out_degree_ok = false;
      rep.overloaded_nodes.push_back(node);
    }
  return rep;
}

TaskGraph search_decoy_instance(const Bias& bias, int cost_bound) {
  if (cost_bound < 1) fail(Errc::parameter, "cost bound must be >= 1");
  const Rat beta = bias.beta;
  if (beta >= 1) fail(Errc::parameter, "decoy instances need beta < 1");

  auto build = [&](const Rat& c_sa, int c_ab, int c_bt, int c_ac, int c_ct) {
    TaskGraph g;
    g.nodes = {"s", "a", "b", "c", "t"};
    g.edges = {{"s", "a", c_sa}, {"a", "b", c_ab}, {"b", "t", c_bt},
               {"a", "c", c_ac}, {"c", "t", c_ct}};
    g.s = "s";
    g.t = "t";
    return g;
  };
  auto verified = [&](TaskGraph& g) {
    CompiledGraph cg = compile(g);
    MotivationReport rep = min_motivating_reward(cg, bias);
    const Cost r = rep.min_reward;
    Traversal full = traverse_with_reward(cg, bias, r);
    if (full.outcome != Outcome::reached) return false;
    if (full.realized_path != std::vector<std::string>{"s", "a", "c", "t"}) return false;
    if (full.plans.front().plan != std::vector<std::string>{"s", "a", "b", "t"}) return false;
    TaskGraph upper = g, lower = g;
    upper.edges = {g.edges[0], g.edges[1], g.edges[2]};
    lower.edges = {g.edges[0], g.edges[3], g.edges[4]};
    if (subgraph_motivates(upper, bias, r)) return false;
    if (subgraph_motivates(lower, bias, r)) return false;
    if (!is_minimal_motivating(g, bias, r)) return false;
    g.reward = r;
    return true;
  };

  for (int c_ab = 1; c_ab <= cost_bound; ++c_ab)
    for (int c_bt = 1; c_bt <= cost_bound; ++c_bt)
      for (int c_ac = 1; c_ac <= cost_bound; ++c_ac)
        for (int c_ct = 1; c_ct <= cost_bound; ++c_ct) {
          const Rat upper_total = Rat(c_ab + c_bt), lower_total = Rat(c_ac + c_ct);
          if (!(upper_total < lower_total)) continue;
          const Rat upper_biased = c_ab + beta * c_bt;
          const Rat peak_ac = std::max(Rat(Rat(c_ac) + beta * c_ct), Rat(c_ct));
          // regime 1: the start node owns the peak (R = c_sa + beta*U)
          {
            Rat lo = std::max(Rat(peak_ac - beta * upper_total), Rat(0));
            Rat hi = (1 - beta) * c_ab;
            if (lo < hi) {
              Rat c_sa = (lo + hi) / 2;
              if (c_sa > 0) {
                TaskGraph g = build(c_sa, c_ab, c_bt, c_ac, c_ct);
                if (verified(g)) return g;
              }
            }
          }
          // regime 2: the peak sits past the fork (R = peak_ac)
          if (upper_biased > peak_ac) {
            Rat lo = std::max(Rat(peak_ac - beta * lower_total), Rat(0));
            Rat hi = peak_ac - beta * upper_total;
            if (lo < hi) {
              Rat c_sa = (lo + hi) / 2;
              if (c_sa > 0) {
                TaskGraph g = build(c_sa, c_ab, c_bt, c_ac, c_ct);
                if (verified(g)) return g;
              }
            }
          }
        }
  fail(Errc::not_found, "no decoy instance within cost bound " + std::to_string(cost_bound));
}

}  // namespace planner
