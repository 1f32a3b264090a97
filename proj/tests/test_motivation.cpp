#include <doctest.h>

#include "planner/instances.hpp"
#include "planner/motivation.hpp"

using namespace planner;

namespace {

TaskGraph three_node_path() {
  TaskGraph g;
  g.nodes = {"s", "v1", "t"};
  g.edges = {{"s", "v1", 1}, {"v1", "t", 4}};
  g.s = "s";
  g.t = "t";
  return g;
}

bool has_node(const TaskGraph& g, const std::string& node) {
  for (const Edge& e : g.edges)
    if (e.from == node || e.to == node) return true;
  return false;
}

}  // namespace

TEST_CASE("minimum motivating reward on the short path") {
  MotivationReport rep = min_motivating_reward(three_node_path(), Bias{Rat(1, 2)});
  CHECK(rep.min_reward == 8);
  CHECK(rep.peak_perceived == 4);
  CHECK(rep.argmax_node == "v1");
  CHECK(rep.trace.outcome == Outcome::reached);
}

TEST_CASE("minimum motivating reward on the demo graph peaks twice") {
  MotivationReport rep = min_motivating_reward(demo_graph(), Bias{Rat(1, 2)});
  CHECK(rep.min_reward == 32);
  CHECK(rep.peak_perceived == 16);
  CHECK(rep.peak_nodes == std::vector<std::string>{"s", "e"});
  CHECK(rep.argmax_node == "s");
}

TEST_CASE("single edge: min reward is cost over beta") {
  TaskGraph g;
  g.nodes = {"s", "t"};
  g.edges = {{"s", "t", 1}};
  g.s = "s";
  g.t = "t";
  CHECK(min_motivating_reward(g, Bias{Rat(1, 2)}).min_reward == 2);
}

TEST_CASE("reward strictness: a millionth less already fails") {
  TaskGraph g = three_node_path();
  Bias bias{Rat(1, 2)};
  Cost r = min_motivating_reward(g, bias).min_reward;
  CHECK(traverse_with_reward(g, bias, r).outcome == Outcome::reached);
  CHECK(traverse_with_reward(g, bias, r - Rat(1, 1000000)).outcome == Outcome::abandoned);
}

TEST_CASE("subgraph search on the course grid removes the v20 state") {
  TaskGraph g = gen_course(3, 2, {1, 4, 9}, 16);
  auto cert = find_motivating_subgraph(g, Bias{Rat(1, 2)}, 16);
  REQUIRE(cert.has_value());
  CHECK(cert->traversal.outcome == Outcome::reached);
  CHECK(!has_node(cert->sub, "v20"));
  CHECK(cert->sub.edges.size() == 10);
  CHECK(cert->traversal.realized_path == std::vector<std::string>{"v00", "v10", "v21", "v32"});
  // removing one more option (v00->v12) still motivates, so not minimal
  CHECK(!cert->minimal);
}

TEST_CASE("a large reward keeps the whole graph") {
  TaskGraph g = gen_course(3, 2, {1, 4, 9}, 16);
  auto cert = find_motivating_subgraph(g, Bias{Rat(1, 2)}, 100);
  REQUIRE(cert.has_value());
  CHECK(cert->sub.edges.size() == compile(g).g.edges.size());
}

TEST_CASE("no subgraph can rescue a bare path with a hopeless reward") {
  CHECK(!find_motivating_subgraph(three_node_path(), Bias{Rat(1, 2)}, 7).has_value());
}

TEST_CASE("search beyond the edge bound reports SizeLimit") {
  try {
    find_motivating_subgraph(gen_bipartite_costs(5), Bias{Rat(1, 2)}, 100);
    FAIL("expected SizeLimit");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::size_limit);
  }
}

TEST_CASE("minimality: single-edge deletions") {
  Bias bias{Rat(1, 2)};
  TaskGraph g = three_node_path();
  CHECK(is_minimal_motivating(g, bias, 8));  // removing either edge kills the path

  TaskGraph course = gen_course(3, 2, {1, 4, 9}, 16);
  CHECK_THROWS_AS(is_minimal_motivating(course, bias, 16), Error);  // NotMotivating

  auto cert = find_motivating_subgraph(course, bias, 16);
  REQUIRE(cert.has_value());
  CHECK(!is_minimal_motivating(cert->sub, bias, 16));
  TaskGraph minimal = minimize_motivating(cert->sub, bias, 16);
  CHECK(is_minimal_motivating(minimal, bias, 16));
  CHECK(check_minimal_structure(minimal, bias, 16).pass());
}

TEST_CASE("greedy minimization yields structure-clean subgraphs on random instances") {
  Bias bias{Rat(1, 2)};
  for (unsigned long long seed = 200; seed < 230; ++seed) {
    TaskGraph g = random_dag(seed, 9);
    Cost r = min_motivating_reward(g, bias).min_reward;
    TaskGraph minimal = minimize_motivating(g, bias, r);
    CHECK(is_minimal_motivating(minimal, bias, r));
    StructureReport sr = check_minimal_structure(minimal, bias, r);
    CHECK(sr.pass());
  }
}

TEST_CASE("structure audit flags a node with two off-trunk escapes") {
  // trunk s-a-b-t; node a also keeps (a,t) and (a,c)+(c,t): deleting (a,c)
  // changes nothing the agent sees, so the graph is not minimal and the
  // off-trunk out-degree bound fails
  TaskGraph g;
  g.nodes = {"s", "a", "b", "c", "t"};
  g.edges = {{"s", "a", 1}, {"a", "t", 10}, {"a", "b", 1},
             {"b", "t", 12}, {"a", "c", 2}, {"c", "t", 12}};
  g.s = "s";
  g.t = "t";
  Bias bias{Rat(1, 2)};
  Cost r = min_motivating_reward(g, bias).min_reward;
  StructureReport sr = check_minimal_structure(g, bias, r);
  CHECK(sr.trunk == std::vector<std::string>{"s", "a", "b", "t"});
  CHECK(sr.edges_covered);  // every extra edge still lies on an a-t bypass
  CHECK(!sr.out_degree_ok);
  CHECK(sr.overloaded_nodes == std::vector<std::string>{"a"});
  CHECK(!is_minimal_motivating(g, bias, r));
}

TEST_CASE("bare-path certificates pass the audit vacuously") {
  Bias bias{Rat(1, 2)};
  StructureReport sr = check_minimal_structure(three_node_path(), bias, 8);
  CHECK(sr.pass());
  CHECK(sr.trunk == std::vector<std::string>{"s", "v1", "t"});
}

TEST_CASE("decoy search: the whole fork is needed") {
  Bias bias{Rat(1, 2)};
  TaskGraph g = search_decoy_instance(bias);
  REQUIRE(g.reward.has_value());
  const Cost r = *g.reward;

  CompiledGraph cg = compile(g);
  Traversal full = traverse_with_reward(cg, bias, r);
  CHECK(full.outcome == Outcome::reached);
  CHECK(full.realized_path == std::vector<std::string>{"s", "a", "c", "t"});
  CHECK(full.plans.front().plan == std::vector<std::string>{"s", "a", "b", "t"});

  // neither branch alone motivates
  TaskGraph upper = g, lower = g;
  upper.edges = {g.edges[0], g.edges[1], g.edges[2]};
  lower.edges = {g.edges[0], g.edges[3], g.edges[4]};
  CHECK(traverse_with_reward(prune_to_st(upper), bias, r).outcome == Outcome::abandoned);
  CHECK(traverse_with_reward(prune_to_st(lower), bias, r).outcome == Outcome::abandoned);

  CHECK(is_minimal_motivating(g, bias, r));
  CHECK(check_minimal_structure(g, bias, r).pass());

  // the exhaustive search agrees that the full graph is the only answer
  auto cert = find_motivating_subgraph(g, bias, r);
  REQUIRE(cert.has_value());
  CHECK(cert->sub.edges.size() == 5);
  CHECK(cert->minimal);
}

TEST_CASE("subset kernel agrees with the compile-per-subgraph reference") {
  Bias bias{Rat(1, 2)};
  TaskGraph g = gen_course(3, 2, {1, 4, 9}, 16);
  CompiledGraph cg = compile(g);
  SubsetSim sim(cg, bias, 16);
  for (uint64_t mask = 0; mask < (uint64_t(1) << cg.g.edges.size()); mask += 7) {
    std::vector<int> keep;
    for (int e = 0; e < static_cast<int>(cg.g.edges.size()); ++e)
      if (mask >> e & 1) keep.push_back(e);
    bool ref;
    try {
      ref = traverse_with_reward(compile(subgraph_by_edges(cg.g, keep)), bias, 16).outcome ==
            Outcome::reached;
    } catch (const Error&) {
      ref = false;
    }
    CHECK(sim.motivates(mask) == ref);
  }
}
