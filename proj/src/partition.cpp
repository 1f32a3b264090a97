#include "planner/partition.hpp"

#include <algorithm>

namespace planner {

Float to_float(const Rat& r) {
  return Float(r.get_num().get_str()) / Float(r.get_den().get_str());
}

namespace {

void check_steps(const std::vector<Cost>& steps, const Cost& r) {
  if (steps.empty()) fail(Errc::parameter, "need at least one step");
  Cost total = 0;
  for (const Cost& c : steps) {
    if (c <= 0) fail(Errc::parameter, "steps must be positive");
    total += c;
  }
  if (r <= total)
    fail(Errc::reward_too_small, "reward " + rat_str(r) + " <= total cost " + rat_str(total));
}

}  // namespace

std::vector<Rat> bottlenecks(const std::vector<Cost>& steps, const Cost& r) {
  check_steps(steps, r);
  std::vector<Rat> out(steps.size());
  Cost suffix = 0;  // cost remaining after step i
  for (int i = static_cast<int>(steps.size()) - 1; i >= 0; --i) {
    Rat b = steps[i] / (r - suffix);
    out[i] = std::min(b, Rat(1));
    suffix += steps[i];
  }
  return out;
}

Rat completion_rate(const std::vector<Cost>& steps, const Cost& r) {
  Rat worst = 0;
  for (const Rat& b : bottlenecks(steps, r)) worst = std::max(worst, b);
  return 1 - worst;
}

namespace {

void check_cr(const Cost& c, const Cost& r, int k) {
  if (k < 1) fail(Errc::parameter, "k must be >= 1");
  if (c <= 0) fail(Errc::parameter, "cost must be positive");
  if (r <= c) fail(Errc::reward_too_small, "need r > c");
}

std::vector<Float> float_bottlenecks(const std::vector<Float>& steps, const Float& r) {
  std::vector<Float> out(steps.size());
  Float suffix = 0;
  for (int i = static_cast<int>(steps.size()) - 1; i >= 0; --i) {
    out[i] = steps[i] / (r - suffix);
    suffix += steps[i];
  }
  return out;
}

}  // namespace

PartitionPlan optimal_partition(const Cost& c, const Cost& r, int k) {
  check_cr(c, r, k);
  PartitionPlan plan;
  plan.total = c;
  plan.reward = r;
  const Float rf = to_float(r);
  Float remaining = to_float(c);
  for (int level = k; level >= 2; --level) {
    Float delta = rf - remaining;
    Float inv = Float(1) / level;
    Float x = pow(delta, 1 - inv) * pow(rf, inv) - delta;
    plan.steps.push_back(x);
    remaining -= x;
  }
  plan.steps.push_back(remaining);
  plan.step_bottlenecks = float_bottlenecks(plan.steps, rf);
  plan.rate = pow(1 - to_float(c) / rf, Float(1) / k);
  return plan;
}

PartitionPlan numeric_oracle_partition(const Cost& c, const Cost& r, int k) {
  check_cr(c, r, k);
  PartitionPlan plan;
  plan.total = c;
  plan.reward = r;
  const Float rf = to_float(r), cf = to_float(c);
  if (k == 1) {
    plan.steps = {cf};
    plan.step_bottlenecks = {cf / rf};
    plan.rate = 1 - cf / rf;
    return plan;
  }

  // steps built forward from a trial shared bottleneck B: the first step is
  // the largest with threshold <= B, then the slack grows and we repeat;
  // the total is monotone in B, so bisection closes on total == c.
  auto total_for = [&](const Float& b, std::vector<Float>* steps) {
    Float slack = rf - cf;  // r - remaining cost ("delta"), grows as steps complete
    Float total = 0;
    for (int i = 0; i < k; ++i) {
      Float x = b * slack / (1 - b);
      if (steps) steps->push_back(x);
      total += x;
      slack += x;
    }
    return total;
  };
  Float lo = 0, hi = 1;
  const Float eps("1e-40");
  int iter = 0;
  while (hi - lo > eps) {
    if (++iter > 500) fail(Errc::convergence_failure, "bottleneck bisection stalled");
    Float mid = (lo + hi) / 2;
    if (total_for(mid, nullptr) < cf)
      lo = mid;
    else
      hi = mid;
  }
  Float b = (lo + hi) / 2;
  total_for(b, &plan.steps);
  // absorb the residual into the last step so the plan sums to c exactly
  Float sum = 0;
  for (const Float& x : plan.steps) sum += x;
  plan.steps.back() += cf - sum;
  plan.step_bottlenecks = float_bottlenecks(plan.steps, rf);
  plan.rate = 1 - *std::max_element(plan.step_bottlenecks.begin(), plan.step_bottlenecks.end());
  return plan;
}

TaskGraph chain_graph(const std::vector<Cost>& steps) {
  if (steps.empty()) fail(Errc::parameter, "need at least one step");
  TaskGraph g;
  for (std::size_t i = 0; i <= steps.size(); ++i) g.nodes.push_back("c" + std::to_string(i));
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] <= 0) fail(Errc::parameter, "steps must be positive");
    g.edges.push_back({g.nodes[i], g.nodes[i + 1], steps[i]});
  }
  g.s = g.nodes.front();
  g.t = g.nodes.back();
  return g;
}

}  // namespace planner
