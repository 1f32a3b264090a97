#include "planner/minor.hpp"

#include <algorithm>
#include <set>

namespace planner {

namespace {

// least j >= 0 with d <= b^j * base, or nullopt when b == 1 and d > base
std::optional<long> rank_of(const Rat& d, const Rat& base, const Rat& b) {
  if (d <= base) return 0;
  if (b == 1) return std::nullopt;
  Rat bound = base;
  for (long j = 1;; ++j) {
    bound *= b;
    if (d <= bound) return j;
  }
}

std::vector<std::optional<long>> ranks_by_pos(const CompiledGraph& cg, const Bias& bias) {
  const Rat base = cg.dist[cg.s];
  if (base == 0) fail(Errc::zero_shortest_path, "rank undefined: d(s,t) = 0");
  const Rat b = bias.inv();
  std::vector<std::optional<long>> out(cg.names.size());
  for (std::size_t v = 0; v < cg.names.size(); ++v) out[v] = rank_of(cg.dist[v], base, b);
  return out;
}

std::vector<int> canonical_shortest_from(const CompiledGraph& cg, int v) {
  std::vector<int> path{v};
  while (v != cg.t) {
    v = cg.canon_next[v];
    path.push_back(v);
  }
  return path;
}

}  // namespace

RankProfile rank_profile(const CompiledGraph& cg, const Bias& bias) {
  auto by_pos = ranks_by_pos(cg, bias);
  RankProfile rp;
  for (std::size_t v = 0; v < cg.names.size(); ++v) rp.rank[cg.names[v]] = by_pos[v];
  return rp;
}

RankProfile rank_profile(const TaskGraph& g, const Bias& bias) {
  return rank_profile(compile(g), bias);
}

std::optional<RankStepViolation> check_rank_steps(const CompiledGraph& cg, const Bias& bias) {
  auto ranks = ranks_by_pos(cg, bias);
  std::vector<int> path;
  detail::realized_path_ids(cg, bias.beta, path);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    long rv = ranks[path[i]].value_or(0), rw = ranks[path[i + 1]].value_or(0);
    if (rw > rv + 1)
      return RankStepViolation{cg.names[path[i]], cg.names[path[i + 1]], rv, rw};
  }
  return std::nullopt;
}

std::optional<RankStepViolation> check_rank_steps(const TaskGraph& g, const Bias& bias) {
  return check_rank_steps(compile(g), bias);
}

std::optional<MinorModel> extract_fan_minor(const CompiledGraph& cg, const Bias& bias) {
  auto ranks = ranks_by_pos(cg, bias);
  std::vector<int> path;
  detail::realized_path_ids(cg, bias.beta, path);

  long kmax = 0;
  for (std::size_t i = 0; i < path.size(); ++i) kmax = std::max(kmax, ranks[path[i]].value_or(0));
  if (kmax < 2) return std::nullopt;

  for (long k = kmax; k >= 2; --k) {
    // prefix ends at the last rank-k node; v_j = last node of rank j on it
    std::size_t cut = path.size();
    for (std::size_t i = 0; i < path.size(); ++i)
      if (ranks[path[i]].value_or(0) == k) cut = i;
    if (cut >= path.size()) continue;
    std::vector<std::size_t> last_of_rank(k + 1, path.size());
    for (std::size_t i = 0; i <= cut; ++i) {
      long r = ranks[path[i]].value_or(0);
      if (r <= k) last_of_rank[r] = i;
    }
    bool ok = true;
    for (long j = 0; j <= k && ok; ++j)
      if (last_of_rank[j] >= path.size()) ok = false;  // cannot happen: ranks step by <= 1
    if (!ok) continue;
    std::set<int> prefix(path.begin(), path.begin() + cut + 1);
    std::vector<std::vector<int>> escapes;
    for (long j = 0; j <= k && ok; ++j) {
      std::vector<int> q = canonical_shortest_from(cg, path[last_of_rank[j]]);
      for (std::size_t i = 1; i < q.size(); ++i)
        if (prefix.count(q[i])) ok = false;  // escape re-enters the prefix
      escapes.push_back(std::move(q));
    }
    if (!ok) continue;

    MinorModel m;
    m.k = k;
    std::size_t at = 0;
    for (long j = 0; j <= k; ++j) {
      std::vector<std::string> seg;
      for (; at <= last_of_rank[j]; ++at) seg.push_back(cg.names[path[at]]);
      m.segments.push_back(std::move(seg));
    }
    std::set<std::string> hub;
    for (const auto& q : escapes)
      for (std::size_t i = 1; i < q.size(); ++i) hub.insert(cg.names[q[i]]);
    m.hub.assign(hub.begin(), hub.end());
    if (!verify_minor(cg.g, m)) return m;
  }
  return std::nullopt;
}

std::optional<MinorModel> extract_fan_minor(const TaskGraph& g, const Bias& bias) {
  return extract_fan_minor(compile(g), bias);
}

std::optional<std::string> verify_minor(const TaskGraph& g, const MinorModel& m) {
  if (m.k < 0 || m.segments.size() != static_cast<std::size_t>(m.k) + 1)
    return "segment count does not match k";

  std::set<std::string> nodes(g.nodes.begin(), g.nodes.end());
  std::set<std::pair<std::string, std::string>> skel;
  std::map<std::string, std::vector<std::string>> adj;
  for (const Edge& e : g.edges) {
    skel.insert({e.from, e.to});
    skel.insert({e.to, e.from});
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }

  std::vector<const std::vector<std::string>*> supers;
  for (const auto& seg : m.segments) supers.push_back(&seg);
  supers.push_back(&m.hub);

  std::set<std::string> taken;
  for (const auto* sp : supers) {
    if (sp->empty()) return "empty super-node";
    for (const auto& n : *sp) {
      if (!nodes.count(n)) return "super-node uses unknown node " + n;
      if (!taken.insert(n).second) return "super-nodes overlap at " + n;
    }
  }
  // connectivity of each super-node in the skeleton
  for (const auto* sp : supers) {
    std::set<std::string> in(sp->begin(), sp->end()), seen{sp->front()};
    std::vector<std::string> stack{sp->front()};
    while (!stack.empty()) {
      std::string n = stack.back();
      stack.pop_back();
      for (const auto& w : adj[n])
        if (in.count(w) && seen.insert(w).second) stack.push_back(w);
    }
    if (seen.size() != in.size()) return "super-node not connected: contains " + sp->front();
  }
  auto touches = [&](const std::vector<std::string>& a, const std::vector<std::string>& b) {
    for (const auto& x : a)
      for (const auto& y : b)
        if (skel.count({x, y})) return true;
    return false;
  };
  for (long j = 0; j < m.k; ++j)
    if (!touches(m.segments[j], m.segments[j + 1]))
      return "no edge between segments " + std::to_string(j) + " and " + std::to_string(j + 1);
  for (long j = 0; j <= m.k; ++j)
    if (!touches(m.hub, m.segments[j]))
      return "hub misses segment " + std::to_string(j);
  return std::nullopt;
}

}  // namespace planner
