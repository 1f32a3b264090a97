#pragma once

#include <set>
#include <string>
#include <vector>

#include "planner/graph.hpp"

namespace planner {

// Sub-interval of [0,1] with rational endpoints and open/closed flags.
struct Interval {
  Rat lo, hi;
  bool lo_closed = true, hi_closed = false;
  bool is_empty = true;

  static Interval empty() { return {}; }
  static Interval make(Rat lo, bool lc, Rat hi, bool hc);
  static Interval closed(const Rat& lo, const Rat& hi) { return make(lo, true, hi, true); }

  bool contains(const Rat& x) const;
  Interval intersect(const Interval& o) const;
  bool operator==(const Interval& o) const;
};

std::string interval_str(const Interval& iv);

// A point of the sweep over [0,1]: either exactly x, or "just after" x.
struct SweepPos {
  Rat x;
  bool plus = false;
  bool operator<(const SweepPos& o) const { return x < o.x || (x == o.x && plus < o.plus); }
  bool operator==(const SweepPos& o) const { return x == o.x && plus == o.plus; }
  bool operator<=(const SweepPos& o) const { return *this < o || *this == o; }
};

// One out-edge seen as the line intercept + beta * slope over [0,1].
// tie_rank orders full ties (the head's topological position).
struct LabeledLine {
  Cost intercept;
  Cost slope;
  int tie_rank;
};

// For each line, the sub-interval of [0,1] where it wins: strictly minimal,
// or minimal with the smallest tie_rank at breakpoints and full ties. The
// nonempty results partition [0,1].
std::vector<Interval> lower_envelope(const std::vector<LabeledLine>& lines);

// Per-edge intervals, indexed like CompiledGraph::g.edges.
struct IntervalLabeling {
  std::vector<Interval> by_edge;
};

IntervalLabeling build_interval_labels(const CompiledGraph& cg);

// Throws MalformedLabeling unless, at every node, the nonempty intervals on
// its out-edges exactly partition [0,1].
void check_partition(const CompiledGraph& cg, const IntervalLabeling& lab);

struct PathInterval {
  std::vector<std::string> path;
  Interval witness;  // full intersection of the labels along the path
};

struct ValidPathSet {
  std::vector<PathInterval> paths;  // in sweep order; witnesses tile [0,1]
};

// Left-to-right sweep: follow the unique label containing the current point,
// jump to the smallest right endpoint on the path, repeat. At most |E| paths.
ValidPathSet enumerate_valid_paths(const CompiledGraph& cg, const IntervalLabeling& lab);

// build_interval_labels + enumerate_valid_paths: all agent paths across
// beta in [0,1] with their beta ranges.
ValidPathSet enumerate_beta_paths(const CompiledGraph& cg);
ValidPathSet enumerate_beta_paths(const TaskGraph& g);

enum class Exec { serial, parallel };

// Independent oracle: simulate the agent at beta = k/resolution for
// k = 1..resolution plus every labeling breakpoint (including the x = 0
// limit), collect the distinct realized paths.
std::set<std::vector<std::string>> brute_force_beta_paths(const CompiledGraph& cg,
                                                          long resolution,
                                                          Exec exec = Exec::serial);
std::set<std::vector<std::string>> brute_force_beta_paths(const TaskGraph& g, long resolution,
                                                          Exec exec = Exec::serial);

// Test helpers. check_path_tiling: witnesses are pairwise disjoint, tile
// [0,1] and the paths are distinct. check_path_set additionally simulates
// each witness interval's midpoint and demands it realize the stored path
// (so the labeling must come from the graph's own costs).
void check_path_tiling(const ValidPathSet& vps);
void check_path_set(const CompiledGraph& cg, const ValidPathSet& vps);

}  // namespace planner
