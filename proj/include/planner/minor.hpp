#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planner/agent.hpp"

namespace planner {

// Rank of v: 0 when d(v,t) <= d(s,t), otherwise the least j > 0 with
// d(v,t) <= b^j * d(s,t). Unset only when beta = 1 and d(v,t) > d(s,t)
// (no power of b = 1 ever covers it).
struct RankProfile {
  std::map<std::string, std::optional<long>> rank;
};

RankProfile rank_profile(const CompiledGraph& cg, const Bias& bias);
RankProfile rank_profile(const TaskGraph& g, const Bias& bias);

// Along the realized path, rank may climb by at most one per edge. Returns
// the violating edge if there is one; any hit is an implementation bug, not
// an instance property.
struct RankStepViolation {
  std::string from, to;
  long rank_from = 0, rank_to = 0;
};
std::optional<RankStepViolation> check_rank_steps(const CompiledGraph& cg, const Bias& bias);
std::optional<RankStepViolation> check_rank_steps(const TaskGraph& g, const Bias& bias);

// Witness for a fan minor in the undirected skeleton: segments R_0..R_k
// partition a prefix of the realized path, the hub spans the escape paths,
// and the whole thing realizes the (k+2)-node fan F_{k+1}.
struct MinorModel {
  long k = 0;  // segments.size() == k + 1
  std::vector<std::vector<std::string>> segments;
  std::vector<std::string> hub;
};

// Constructive extraction: take the realized path, find the last node v of
// maximal rank k (none when k < 2), mark the last node of each rank j <= k
// on the prefix, and grow the hub from the canonical shortest escapes. The
// escape paths meet the prefix only at their origins; if that ever fails the
// construction retries with the prefix cut at the largest rank that checks.
std::optional<MinorModel> extract_fan_minor(const CompiledGraph& cg, const Bias& bias);
std::optional<MinorModel> extract_fan_minor(const TaskGraph& g, const Bias& bias);

// Structural audit of a claimed model: pairwise disjointness, skeleton
// connectivity of every super-node, chain adjacency R_j ~ R_j+1 and hub
// adjacency S ~ R_j. Returns a description of the first violation.
std::optional<std::string> verify_minor(const TaskGraph& g, const MinorModel& m);

}  // namespace planner
