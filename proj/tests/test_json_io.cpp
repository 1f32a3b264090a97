#include <doctest.h>

#include "planner/json_io.hpp"

using namespace planner;

namespace {

void check_same_graph(const TaskGraph& a, const TaskGraph& b) {
  CHECK(a.nodes == b.nodes);
  CHECK(a.s == b.s);
  CHECK(a.t == b.t);
  CHECK(a.allow_zero_cost == b.allow_zero_cost);
  CHECK(a.reward.has_value() == b.reward.has_value());
  if (a.reward && b.reward) CHECK(*a.reward == *b.reward);
  REQUIRE(a.edges.size() == b.edges.size());
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    CHECK(a.edges[i].from == b.edges[i].from);
    CHECK(a.edges[i].to == b.edges[i].to);
    CHECK(a.edges[i].cost == b.edges[i].cost);
  }
}

}  // namespace

TEST_CASE("rationals round-trip through JSON in all accepted spellings") {
  for (const char* s : {"26", "-7/3", "1000000000000000000000/7", "0"}) {
    Rat v = parse_rat(s);
    CHECK(rat_from_json(rat_json(v)) == v);
  }
  CHECK(rat_from_json(json::parse(R"("3/2")")) == Rat(3, 2));
  CHECK(rat_from_json(json::parse("5")) == Rat(5));
  CHECK(rat_from_json(json::parse(R"({"num": 3, "den": 6})")) == Rat(1, 2));
  CHECK(rat_from_json(json::parse(R"({"num": "19", "den": "10"})")) == Rat(19, 10));
  CHECK_THROWS_AS(rat_from_json(json::parse(R"({"num": 1, "den": 0})")), Error);
  CHECK_THROWS_AS(rat_from_json(json::parse("true")), Error);
}

TEST_CASE("graph files round-trip") {
  for (TaskGraph g : {demo_graph(), gen_exponential(8, Rat(19, 10), true),
                      gen_course(3, 2, {1, 4, 9}, 16)}) {
    check_same_graph(graph_from_json(graph_to_json(g)), g);
    // and through text
    check_same_graph(graph_from_json(json::parse(graph_to_json(g).dump())), g);
  }
}

TEST_CASE("graph parser rejects garbage") {
  CHECK_THROWS_AS(graph_from_json(json::parse("[]")), Error);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"nodes": []})")), json::exception);
}

TEST_CASE("traversals round-trip with their plan logs") {
  Traversal tr = traverse_fixed_goal(demo_graph(), Bias{Rat(1, 2)});
  Traversal rt = traversal_from_json(traversal_to_json(tr));
  CHECK(rt.realized_path == tr.realized_path);
  CHECK(rt.total_cost == tr.total_cost);
  CHECK(rt.outcome == tr.outcome);
  REQUIRE(rt.plans.size() == tr.plans.size());
  for (std::size_t i = 0; i < tr.plans.size(); ++i) {
    CHECK(rt.plans[i].node == tr.plans[i].node);
    CHECK(rt.plans[i].plan == tr.plans[i].plan);
    CHECK(rt.plans[i].biased_cost == tr.plans[i].biased_cost);
  }

  Traversal quit = traverse_with_reward(gen_course(3, 2, {1, 4, 9}, 16), Bias{Rat(1, 2)}, 16);
  Traversal qrt = traversal_from_json(traversal_to_json(quit));
  CHECK(qrt.outcome == Outcome::abandoned);
  CHECK(qrt.stopped_at == quit.stopped_at);
}

TEST_CASE("intervals and labeled instances round-trip") {
  Interval iv = Interval::make(Rat(1, 3), true, Rat(2, 3), false);
  CHECK(interval_from_json(interval_json(iv)) == iv);
  CHECK(interval_from_json(interval_json(Interval::empty())).is_empty);

  LabeledInstance inst = gen_bipartite_labels(3);
  LabeledInstance rt = labeled_instance_from_json(labeled_instance_to_json(inst));
  check_same_graph(rt.g, inst.g);
  REQUIRE(rt.labels.size() == inst.labels.size());
  for (const auto& [key, iv2] : inst.labels) CHECK(rt.labels.at(key) == iv2);

  // the round-tripped labeling still sweeps to the same paths
  CompiledGraph cg = compile(rt.g);
  CHECK(enumerate_valid_paths(cg, rt.to_labeling(cg)).paths.size() == 9);
}

TEST_CASE("report serializers cover their fields") {
  json ps = path_set_json(enumerate_beta_paths(demo_graph()));
  CHECK(ps.at("count") == 2);
  CHECK(ps.at("paths").size() == 2);

  MotivationReport rep = min_motivating_reward(demo_graph(), Bias{Rat(1, 2)});
  json mj = motivation_report_json(rep);
  CHECK(rat_from_json(mj.at("min_reward")) == 32);

  PartitionPlan plan = optimal_partition(3, 4, 2);
  json pj = partition_plan_json(plan);
  CHECK(pj.at("steps").size() == 2);
}
