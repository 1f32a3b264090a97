#include "planner/graph.hpp"

#include <algorithm>
#include <set>

namespace planner {

void validate(const TaskGraph& g) {
  std::set<std::string> nodes(g.nodes.begin(), g.nodes.end());
  if (nodes.size() != g.nodes.size()) fail(Errc::parameter, "duplicate node id");
  if (!nodes.count(g.s) || !nodes.count(g.t))
    fail(Errc::missing_endpoint, "start or goal node missing from node set");
  if (g.s == g.t) fail(Errc::missing_endpoint, "start and goal must differ");

  std::set<std::pair<std::string, std::string>> seen;
  for (const Edge& e : g.edges) {
    if (!nodes.count(e.from) || !nodes.count(e.to))
      fail(Errc::missing_endpoint, "edge endpoint not a node: " + e.from + "->" + e.to);
    if (e.cost < 0 || (e.cost == 0 && !g.allow_zero_cost))
      fail(Errc::non_positive_cost,
           "edge " + e.from + "->" + e.to + " has non-positive cost " + rat_str(e.cost));
    if (!seen.insert({e.from, e.to}).second)
      fail(Errc::duplicate_edge, "parallel edge " + e.from + "->" + e.to);
    if (e.from == e.to) fail(Errc::cycle_detected, "self loop at " + e.from + ": " + e.from);
  }

  // Kahn's algorithm; leftovers witness a cycle.
  std::map<std::string, int> indeg;
  std::map<std::string, std::set<std::string>> adj;
  for (const auto& n : g.nodes) indeg[n] = 0;
  for (const Edge& e : g.edges) {
    indeg[e.to]++;
    adj[e.from].insert(e.to);
  }
  std::set<std::string> ready;
  for (const auto& [n, d] : indeg)
    if (d == 0) ready.insert(n);
  std::size_t emitted = 0;
  while (!ready.empty()) {
    std::string n = *ready.begin();
    ready.erase(ready.begin());
    emitted++;
    for (const auto& w : adj[n])
      if (--indeg[w] == 0) ready.insert(w);
  }
  if (emitted != g.nodes.size()) {
    // name one cycle: walk forward through leftover nodes until a repeat
    std::set<std::string> left;
    for (const auto& [n, d] : indeg)
      if (d > 0) left.insert(n);
    std::vector<std::string> walk{*left.begin()};
    std::map<std::string, std::size_t> at{{walk[0], 0}};
    for (;;) {
      const auto& nexts = adj[walk.back()];
      std::string next;
      for (const auto& w : nexts)
        if (left.count(w)) {
          next = w;
          break;
        }
      auto it = at.find(next);
      if (it != at.end()) {
        std::string desc;
        for (std::size_t i = it->second; i < walk.size(); ++i) desc += walk[i] + "->";
        fail(Errc::cycle_detected, "cycle: " + desc + next);
      }
      at[next] = walk.size();
      walk.push_back(next);
    }
  }
}

TaskGraph prune_to_st(const TaskGraph& g) {
  std::map<std::string, std::vector<std::string>> fwd, bwd;
  for (const Edge& e : g.edges) {
    fwd[e.from].push_back(e.to);
    bwd[e.to].push_back(e.from);
  }
  auto reach = [](const std::string& root,
                  std::map<std::string, std::vector<std::string>>& adj) {
    std::set<std::string> seen{root};
    std::vector<std::string> stack{root};
    while (!stack.empty()) {
      std::string n = stack.back();
      stack.pop_back();
      for (const auto& w : adj[n])
        if (seen.insert(w).second) stack.push_back(w);
    }
    return seen;
  };
  std::set<std::string> from_s = reach(g.s, fwd), to_t = reach(g.t, bwd);
  if (!from_s.count(g.t)) fail(Errc::no_path, "no path from " + g.s + " to " + g.t);

  TaskGraph out;
  out.s = g.s;
  out.t = g.t;
  out.reward = g.reward;
  out.allow_zero_cost = g.allow_zero_cost;
  for (const auto& n : g.nodes)
    if (from_s.count(n) && to_t.count(n)) out.nodes.push_back(n);
  for (const Edge& e : g.edges)
    if (from_s.count(e.from) && to_t.count(e.to) && from_s.count(e.to) && to_t.count(e.from))
      out.edges.push_back(e);
  return out;
}

TopoOrder topo_order(const TaskGraph& g) {
  std::map<std::string, int> indeg;
  std::map<std::string, std::set<std::string>> adj;
  for (const auto& n : g.nodes) indeg[n] = 0;
  for (const Edge& e : g.edges) {
    indeg[e.to]++;
    adj[e.from].insert(e.to);
  }
  std::set<std::string> ready;
  for (const auto& [n, d] : indeg)
    if (d == 0) ready.insert(n);

  TopoOrder topo;
  while (!ready.empty()) {
    // s jumps the queue; everything else is id-lexicographic
    std::string n = ready.count(g.s) ? g.s : *ready.begin();
    ready.erase(n);
    topo.pos[n] = static_cast<int>(topo.order.size());
    topo.order.push_back(n);
    for (const auto& w : adj[n])
      if (--indeg[w] == 0) ready.insert(w);
  }
  if (topo.order.size() != g.nodes.size()) fail(Errc::cycle_detected, "graph has a cycle");
  return topo;
}

int CompiledGraph::node(const std::string& id) const {
  auto it = pos.find(id);
  if (it == pos.end()) fail(Errc::parameter, "unknown node: " + id);
  return it->second;
}

int CompiledGraph::edge_between(const std::string& from, const std::string& to) const {
  auto f = pos.find(from), t_ = pos.find(to);
  if (f == pos.end() || t_ == pos.end()) return -1;
  for (const Arc& a : out[f->second])
    if (a.head == t_->second) return a.edge;
  return -1;
}

CompiledGraph compile(const TaskGraph& input) {
  validate(input);
  CompiledGraph cg;
  cg.g = prune_to_st(input);
  TopoOrder topo = topo_order(cg.g);
  cg.names = topo.order;
  cg.pos = topo.pos;
  cg.s = cg.pos.at(cg.g.s);
  cg.t = cg.pos.at(cg.g.t);

  std::sort(cg.g.edges.begin(), cg.g.edges.end(), [&](const Edge& a, const Edge& b) {
    return std::pair(cg.pos.at(a.from), cg.pos.at(a.to)) <
           std::pair(cg.pos.at(b.from), cg.pos.at(b.to));
  });
  int n = static_cast<int>(cg.names.size());
  cg.out.assign(n, {});
  for (int i = 0; i < static_cast<int>(cg.g.edges.size()); ++i) {
    const Edge& e = cg.g.edges[i];
    cg.tail.push_back(cg.pos.at(e.from));
    cg.head.push_back(cg.pos.at(e.to));
    cg.out[cg.tail[i]].push_back({cg.head[i], i});
  }

  // exact d(v,t) and the canonical (topo tie-break) shortest-path successor
  cg.dist.assign(n, Rat(0));
  cg.canon_next.assign(n, -1);
  for (int v = n - 1; v >= 0; --v) {
    if (v == cg.t) continue;
    bool first = true;
    for (const CompiledGraph::Arc& a : cg.out[v]) {
      Rat via = cg.g.edges[a.edge].cost + cg.dist[a.head];
      if (first || via < cg.dist[v]) {
        cg.dist[v] = via;
        cg.canon_next[v] = a.head;
        first = false;
      }
    }
  }

  // int64 image: common denominator, then scaled costs/dists if they fit
  mpz_class denom = 1;
  for (const Edge& e : cg.g.edges) denom = lcm(denom, e.cost.get_den());
  for (;;) {
    auto d64 = to_i64(denom);
    if (!d64 || *d64 >= CompiledGraph::fast_bound) break;
    cg.denom = *d64;
    cg.fast_ok = true;
    for (const Edge& e : cg.g.edges) {
      mpz_class scaled = e.cost.get_num() * (denom / e.cost.get_den());
      auto v = to_i64(scaled);
      if (!v || *v >= CompiledGraph::fast_bound) {
        cg.fast_ok = false;
        break;
      }
      cg.cost_i.push_back(*v);
    }
    if (cg.fast_ok)
      for (const Rat& d : cg.dist) {
        mpz_class scaled = d.get_num() * (denom / d.get_den());
        auto v = to_i64(scaled);
        if (!v || *v >= CompiledGraph::fast_bound) {
          cg.fast_ok = false;
          break;
        }
        cg.dist_i.push_back(*v);
      }
    break;
  }
  if (!cg.fast_ok) {
    cg.cost_i.clear();
    cg.dist_i.clear();
    cg.denom = 1;
  }
  return cg;
}

std::map<std::string, Cost> dist_to_t(const TaskGraph& g) {
  CompiledGraph cg = compile(g);
  std::map<std::string, Cost> out;
  for (std::size_t i = 0; i < cg.names.size(); ++i) out[cg.names[i]] = cg.dist[i];
  return out;
}

TaskGraph subgraph_by_edges(const TaskGraph& g, const std::vector<int>& keep) {
  TaskGraph out;
  out.nodes = g.nodes;
  out.s = g.s;
  out.t = g.t;
  out.reward = g.reward;
  out.allow_zero_cost = g.allow_zero_cost;
  for (int i : keep) {
    if (i < 0 || i >= static_cast<int>(g.edges.size()))
      fail(Errc::parameter, "edge index out of range");
    out.edges.push_back(g.edges[i]);
  }
  return out;
}

}  // namespace planner
