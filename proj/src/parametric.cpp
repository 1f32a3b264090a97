#include "planner/parametric.hpp"

#include <algorithm>
#include <map>

#include "planner/agent.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace planner {

Interval Interval::make(Rat lo, bool lc, Rat hi, bool hc) {
  Interval iv;
  iv.lo = std::move(lo);
  iv.hi = std::move(hi);
  iv.lo_closed = lc;
  iv.hi_closed = hc;
  iv.is_empty = iv.lo > iv.hi || (iv.lo == iv.hi && !(lc && hc));
  return iv;
}

bool Interval::contains(const Rat& x) const {
  if (is_empty) return false;
  if (x < lo || x > hi) return false;
  if (x == lo && !lo_closed) return false;
  if (x == hi && !hi_closed) return false;
  return true;
}

Interval Interval::intersect(const Interval& o) const {
  if (is_empty || o.is_empty) return empty();
  Rat nlo;
  bool nlc;
  if (lo > o.lo) {
    nlo = lo;
    nlc = lo_closed;
  } else if (o.lo > lo) {
    nlo = o.lo;
    nlc = o.lo_closed;
  } else {
    nlo = lo;
    nlc = lo_closed && o.lo_closed;
  }
  Rat nhi;
  bool nhc;
  if (hi < o.hi) {
    nhi = hi;
    nhc = hi_closed;
  } else if (o.hi < hi) {
    nhi = o.hi;
    nhc = o.hi_closed;
  } else {
    nhi = hi;
    nhc = hi_closed && o.hi_closed;
  }
  return make(nlo, nlc, nhi, nhc);
}

bool Interval::operator==(const Interval& o) const {
  if (is_empty && o.is_empty) return true;
  return is_empty == o.is_empty && lo == o.lo && hi == o.hi && lo_closed == o.lo_closed &&
         hi_closed == o.hi_closed;
}

std::string interval_str(const Interval& iv) {
  if (iv.is_empty) return "(empty)";
  return std::string(iv.lo_closed ? "[" : "(") + rat_str(iv.lo) + ", " + rat_str(iv.hi) +
         (iv.hi_closed ? "]" : ")");
}

namespace {

// line value ordering at a sweep position; "just after x" breaks value ties
// by slope before falling back to the head rank
int winner_at(const std::vector<LabeledLine>& lines, const SweepPos& pos) {
  int best = -1;
  Rat best_val;
  for (int j = 0; j < static_cast<int>(lines.size()); ++j) {
    Rat val = lines[j].intercept + pos.x * lines[j].slope;
    if (best < 0) {
      best = j;
      best_val = val;
      continue;
    }
    if (val < best_val) {
      best = j;
      best_val = val;
      continue;
    }
    if (val > best_val) continue;
    if (pos.plus) {
      if (lines[j].slope < lines[best].slope ||
          (lines[j].slope == lines[best].slope && lines[j].tie_rank < lines[best].tie_rank))
        best = j;
    } else if (lines[j].tie_rank < lines[best].tie_rank) {
      best = j;
    }
  }
  return best;
}

}  // namespace

std::vector<Interval> lower_envelope(const std::vector<LabeledLine>& lines) {
  if (lines.empty()) fail(Errc::parameter, "lower_envelope needs at least one line");
  std::vector<Interval> out(lines.size(), Interval::empty());

  SweepPos pos{Rat(0), false};
  const SweepPos end{Rat(1), false};
  for (std::size_t guard = 0; guard <= lines.size() + 1; ++guard) {
    int w = winner_at(lines, pos);
    // earliest position > pos at which some other line takes over
    bool have_next = false;
    SweepPos next;
    for (int j = 0; j < static_cast<int>(lines.size()); ++j) {
      if (j == w || lines[j].slope >= lines[w].slope) continue;
      Rat cross = (lines[j].intercept - lines[w].intercept) / (lines[w].slope - lines[j].slope);
      SweepPos take{cross, lines[j].tie_rank > lines[w].tie_rank};
      if (pos < take && (!have_next || take < next)) {
        have_next = true;
        next = take;
      }
    }
    if (!have_next || end < next) {
      out[w] = Interval::make(pos.x, !pos.plus, Rat(1), true);
      return out;
    }
    out[w] = Interval::make(pos.x, !pos.plus, next.x, next.plus);
    pos = next;
  }
  fail(Errc::parameter, "lower_envelope failed to converge");  // unreachable
}

IntervalLabeling build_interval_labels(const CompiledGraph& cg) {
  IntervalLabeling lab;
  lab.by_edge.assign(cg.g.edges.size(), Interval::empty());
  for (std::size_t v = 0; v < cg.out.size(); ++v) {
    if (cg.out[v].empty()) continue;
    std::vector<LabeledLine> lines;
    lines.reserve(cg.out[v].size());
    for (const CompiledGraph::Arc& a : cg.out[v])
      lines.push_back({cg.g.edges[a.edge].cost, cg.dist[a.head], a.head});
    std::vector<Interval> env = lower_envelope(lines);
    for (std::size_t i = 0; i < cg.out[v].size(); ++i) lab.by_edge[cg.out[v][i].edge] = env[i];
  }
  return lab;
}

namespace {

void check_tiling(const std::vector<Interval>& parts, const std::string& context) {
  std::vector<Interval> ivs;
  for (const Interval& iv : parts)
    if (!iv.is_empty) ivs.push_back(iv);
  if (ivs.empty()) fail(Errc::malformed_labeling, context + ": no nonempty intervals");
  std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed > b.lo_closed;
  });
  if (ivs.front().lo != 0 || !ivs.front().lo_closed)
    fail(Errc::malformed_labeling, context + ": cover does not start closed at 0");
  for (std::size_t i = 0; i + 1 < ivs.size(); ++i) {
    if (ivs[i].hi != ivs[i + 1].lo || ivs[i].hi_closed == ivs[i + 1].lo_closed)
      fail(Errc::malformed_labeling,
           context + ": gap or overlap at " + rat_str(ivs[i].hi));
  }
  if (ivs.back().hi != 1 || !ivs.back().hi_closed)
    fail(Errc::malformed_labeling, context + ": cover does not end closed at 1");
}

}  // namespace

void check_partition(const CompiledGraph& cg, const IntervalLabeling& lab) {
  if (lab.by_edge.size() != cg.g.edges.size())
    fail(Errc::malformed_labeling, "labeling size does not match edge count");
  for (std::size_t v = 0; v < cg.out.size(); ++v) {
    if (cg.out[v].empty()) continue;
    std::vector<Interval> parts;
    for (const CompiledGraph::Arc& a : cg.out[v]) parts.push_back(lab.by_edge[a.edge]);
    check_tiling(parts, "node " + cg.names[v]);
  }
}

ValidPathSet enumerate_valid_paths(const CompiledGraph& cg, const IntervalLabeling& lab) {
  check_partition(cg, lab);
  ValidPathSet out;
  const std::size_t max_paths = cg.g.edges.size();

  SweepPos pos{Rat(0), false};
  const SweepPos end{Rat(1), false};
  auto pos_in = [](const Interval& iv, const SweepPos& p) {
    if (iv.is_empty) return false;
    if (p.plus) return iv.lo <= p.x && p.x < iv.hi;
    return iv.contains(p.x);
  };
  for (;;) {
    // the unique path whose labels contain pos
    std::vector<std::string> path{cg.names[cg.s]};
    Interval witness = Interval::make(Rat(0), true, Rat(1), true);
    SweepPos next{Rat(2), false};
    int v = cg.s;
    while (v != cg.t) {
      int chosen = -1;
      for (const CompiledGraph::Arc& a : cg.out[v])
        if (pos_in(lab.by_edge[a.edge], pos)) {
          chosen = a.edge;
          break;
        }
      if (chosen < 0)
        fail(Errc::malformed_labeling, "no label contains the sweep point at " + cg.names[v]);
      const Interval& iv = lab.by_edge[chosen];
      witness = witness.intersect(iv);
      SweepPos invalid_from{iv.hi, iv.hi_closed};  // first position past iv
      if (invalid_from < next) next = invalid_from;
      v = cg.head[chosen];
      path.push_back(cg.names[v]);
    }
    out.paths.push_back({std::move(path), witness});
    if (out.paths.size() > max_paths)
      fail(Errc::malformed_labeling, "more valid paths than edges");  // charging bound
    if (end < next) return out;
    pos = next;
  }
}

ValidPathSet enumerate_beta_paths(const CompiledGraph& cg) {
  return enumerate_valid_paths(cg, build_interval_labels(cg));
}

ValidPathSet enumerate_beta_paths(const TaskGraph& g) { return enumerate_beta_paths(compile(g)); }

namespace {

std::vector<Rat> beta_samples(const CompiledGraph& cg, long resolution) {
  if (resolution < 1) fail(Errc::parameter, "resolution must be >= 1");
  std::set<Rat> pts;
  for (long k = 1; k <= resolution; ++k) {
    Rat b(k, resolution);
    b.canonicalize();
    pts.insert(b);
  }
  IntervalLabeling lab = build_interval_labels(cg);
  for (const Interval& iv : lab.by_edge) {
    if (iv.is_empty) continue;
    pts.insert(iv.lo);
    pts.insert(iv.hi);
  }
  return {pts.begin(), pts.end()};
}

std::vector<int> realized_ids(const CompiledGraph& cg, const Rat& beta, std::vector<int>& buf) {
  auto p = to_i64(beta.get_num());
  auto q = to_i64(beta.get_den());
  if (p && q && detail::realized_path_ids_fast(cg, *p, *q, buf)) return buf;
  detail::realized_path_ids(cg, beta, buf);
  return buf;
}

}  // namespace

std::set<std::vector<std::string>> brute_force_beta_paths(const CompiledGraph& cg,
                                                          long resolution, Exec exec) {
  std::vector<Rat> betas = beta_samples(cg, resolution);
  std::set<std::vector<int>> ids;

  if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel
    {
      std::set<std::vector<int>> local;
      std::vector<int> buf;
#pragma omp for schedule(static) nowait
      for (long i = 0; i < static_cast<long>(betas.size()); ++i)
        local.insert(realized_ids(cg, betas[i], buf));
#pragma omp critical
      ids.merge(local);
    }
#else
    exec = Exec::serial;
#endif
  }
  if (exec == Exec::serial) {
    std::vector<int> buf;
    for (const Rat& b : betas) ids.insert(realized_ids(cg, b, buf));
  }

  std::set<std::vector<std::string>> out;
  for (const auto& path : ids) {
    std::vector<std::string> named;
    named.reserve(path.size());
    for (int v : path) named.push_back(cg.names[v]);
    out.insert(std::move(named));
  }
  return out;
}

std::set<std::vector<std::string>> brute_force_beta_paths(const TaskGraph& g, long resolution,
                                                          Exec exec) {
  return brute_force_beta_paths(compile(g), resolution, exec);
}

void check_path_tiling(const ValidPathSet& vps) {
  std::vector<Interval> ivs;
  std::set<std::vector<std::string>> seen;
  for (const PathInterval& pi : vps.paths) {
    if (pi.witness.is_empty) fail(Errc::malformed_labeling, "empty witness interval");
    ivs.push_back(pi.witness);
    if (!seen.insert(pi.path).second) fail(Errc::malformed_labeling, "duplicate path");
  }
  check_tiling(ivs, "witness set");
}

void check_path_set(const CompiledGraph& cg, const ValidPathSet& vps) {
  check_path_tiling(vps);
  // interior realization: the midpoint agent takes exactly the stored path
  for (const PathInterval& pi : vps.paths) {
    if (pi.witness.lo == pi.witness.hi) continue;  // point interval, no interior
    Rat mid = (pi.witness.lo + pi.witness.hi) / 2;
    std::vector<int> buf;
    detail::realized_path_ids(cg, mid, buf);
    std::vector<std::string> named;
    for (int v : buf) named.push_back(cg.names[v]);
    if (named != pi.path)
      fail(Errc::malformed_labeling, "midpoint simulation disagrees with sweep path");
  }
}

}  // namespace planner
