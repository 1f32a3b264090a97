#pragma once

#include <stdexcept>
#include <string>

namespace planner {

enum class Errc {
  parse,
  parameter,
  cycle_detected,
  missing_endpoint,
  non_positive_cost,
  duplicate_edge,
  no_path,
  zero_shortest_path,
  malformed_labeling,
  reward_too_small,
  precision_violation,
  size_limit,
  not_motivating,
  not_found,
  convergence_failure,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, std::string msg) : std::runtime_error(std::move(msg)), code_(c) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace planner
