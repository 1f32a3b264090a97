#include <doctest.h>

#include "planner/instances.hpp"

using namespace planner;

TEST_CASE("lower_envelope: crossing lines split [0,1] at the intersection") {
  // constant line wins the tie at 1/2: its head is earlier in the order
  std::vector<LabeledLine> lines{{Rat(0), Rat(1), 1}, {Rat(1, 2), Rat(0), 0}};
  auto env = lower_envelope(lines);
  CHECK(env[0] == Interval::make(0, true, Rat(1, 2), false));
  CHECK(env[1] == Interval::make(Rat(1, 2), true, 1, true));
}

TEST_CASE("lower_envelope: breakpoint ownership follows the head order") {
  // same geometry, tie ranks swapped: the sloped line keeps the breakpoint
  std::vector<LabeledLine> lines{{Rat(0), Rat(1), 0}, {Rat(1, 2), Rat(0), 1}};
  auto env = lower_envelope(lines);
  CHECK(env[0] == Interval::make(0, true, Rat(1, 2), true));
  CHECK(env[1] == Interval::make(Rat(1, 2), false, 1, true));
}

TEST_CASE("lower_envelope: single line owns everything") {
  auto env = lower_envelope({{Rat(7), Rat(3), 0}});
  CHECK(env[0] == Interval::closed(0, 1));
}

TEST_CASE("lower_envelope: identical lines resolve by rank") {
  auto env = lower_envelope({{Rat(2), Rat(5), 3}, {Rat(2), Rat(5), 1}});
  CHECK(env[0].is_empty);
  CHECK(env[1] == Interval::closed(0, 1));
}

TEST_CASE("lower_envelope: three lines, middle one on a proper interior interval") {
  // values at 0: 0, 1, 3; slopes 6, 3, 0 -> breaks at 1/3 and 2/3
  auto env = lower_envelope({{Rat(0), Rat(6), 0}, {Rat(1), Rat(3), 1}, {Rat(3), Rat(0), 2}});
  CHECK(env[0] == Interval::make(0, true, Rat(1, 3), true));
  CHECK(env[1] == Interval::make(Rat(1, 3), false, Rat(2, 3), true));
  CHECK(env[2] == Interval::make(Rat(2, 3), false, 1, true));
}

TEST_CASE("interval labels on the demo graph match the hand computation") {
  CompiledGraph cg = compile(demo_graph());
  IntervalLabeling lab = build_interval_labels(cg);
  check_partition(cg, lab);
  // 8+16b vs 16+4b cross at 2/3; head a is earlier, so (s,a) keeps 2/3
  CHECK(lab.by_edge[cg.edge_between("s", "c")] == Interval::make(0, true, Rat(2, 3), false));
  CHECK(lab.by_edge[cg.edge_between("s", "a")] == Interval::make(Rat(2, 3), true, 1, true));
  // 2+16b vs 8+8b cross at 3/4; head d is earlier than e
  CHECK(lab.by_edge[cg.edge_between("c", "e")] == Interval::make(0, true, Rat(3, 4), false));
  CHECK(lab.by_edge[cg.edge_between("c", "d")] == Interval::make(Rat(3, 4), true, 1, true));
  // single out-edge
  CHECK(lab.by_edge[cg.edge_between("b", "t")] == Interval::closed(0, 1));
}

TEST_CASE("enumerate_valid_paths sweeps the demo labeling into two paths") {
  CompiledGraph cg = compile(demo_graph());
  ValidPathSet vps = enumerate_valid_paths(cg, build_interval_labels(cg));
  REQUIRE(vps.paths.size() == 2);
  CHECK(vps.paths[0].path == std::vector<std::string>{"s", "c", "e", "t"});
  CHECK(vps.paths[0].witness == Interval::make(0, true, Rat(2, 3), false));
  CHECK(vps.paths[1].path == std::vector<std::string>{"s", "a", "b", "t"});
  CHECK(vps.paths[1].witness == Interval::make(Rat(2, 3), true, 1, true));
}

TEST_CASE("enumerate_valid_paths on a chain: one path, witness [0,1]") {
  TaskGraph chain;
  chain.nodes = {"s", "a", "t"};
  chain.edges = {{"s", "a", 1}, {"a", "t", 2}};
  chain.s = "s";
  chain.t = "t";
  CompiledGraph cg = compile(chain);
  ValidPathSet vps = enumerate_beta_paths(cg);
  REQUIRE(vps.paths.size() == 1);
  CHECK(vps.paths[0].witness == Interval::closed(0, 1));
}

TEST_CASE("malformed labelings are rejected") {
  CompiledGraph cg = compile(demo_graph());
  IntervalLabeling lab = build_interval_labels(cg);
  lab.by_edge[cg.edge_between("s", "c")] = Interval::make(0, true, Rat(1, 3), false);  // gap
  CHECK_THROWS_AS(check_partition(cg, lab), Error);
  CHECK_THROWS_AS(enumerate_valid_paths(cg, lab), Error);
  lab.by_edge.pop_back();
  CHECK_THROWS_AS(check_partition(cg, lab), Error);
}

TEST_CASE("a point interval at 0 is swept and matched by the limit simulation") {
  // both edges out of s cost 2: at beta=0 the tie goes to the earlier head a,
  // which is immediately overtaken for any positive beta
  TaskGraph g;
  g.nodes = {"s", "a", "b", "t"};
  g.edges = {{"s", "a", 2}, {"s", "b", 2}, {"a", "t", 2}, {"b", "t", 1}};
  g.s = "s";
  g.t = "t";
  CompiledGraph cg = compile(g);
  ValidPathSet vps = enumerate_beta_paths(cg);
  REQUIRE(vps.paths.size() == 2);
  CHECK(vps.paths[0].path == std::vector<std::string>{"s", "a", "t"});
  CHECK(vps.paths[0].witness == Interval::closed(0, 0));
  CHECK(vps.paths[1].path == std::vector<std::string>{"s", "b", "t"});
  CHECK(vps.paths[1].witness == Interval::make(0, false, 1, true));

  auto oracle = brute_force_beta_paths(cg, 100);
  std::set<std::vector<std::string>> swept;
  for (const PathInterval& pi : vps.paths) swept.insert(pi.path);
  CHECK(swept == oracle);
}

TEST_CASE("enumerate_beta_paths counts") {
  CHECK(enumerate_beta_paths(demo_graph()).paths.size() == 2);
  CHECK(enumerate_beta_paths(gen_bipartite_costs(3)).paths.size() == 9);
}

TEST_CASE("sweep equals the grid oracle on the demo graph") {
  auto oracle = brute_force_beta_paths(demo_graph(), 1000);
  CHECK(oracle == std::set<std::vector<std::string>>{{"s", "c", "e", "t"}, {"s", "a", "b", "t"}});
}

TEST_CASE("sweep equals the grid oracle on random instances") {
  for (unsigned long long seed : {31ULL, 37ULL, 41ULL, 43ULL, 47ULL}) {
    CompiledGraph cg = compile(random_dag(seed, 10));
    ValidPathSet vps = enumerate_beta_paths(cg);
    CHECK(vps.paths.size() <= cg.g.edges.size());
    check_path_set(cg, vps);
    std::set<std::vector<std::string>> swept;
    for (const PathInterval& pi : vps.paths) swept.insert(pi.path);
    CHECK(swept == brute_force_beta_paths(cg, 500, Exec::serial));
  }
}

TEST_CASE("parallel and serial grid oracles agree") {
  CompiledGraph cg = compile(random_dag(53, 10));
  CHECK(brute_force_beta_paths(cg, 400, Exec::serial) ==
        brute_force_beta_paths(cg, 400, Exec::parallel));
}

TEST_CASE("int64 walk kernel matches the exact reference") {
  for (unsigned long long seed : {59ULL, 61ULL, 67ULL}) {
    CompiledGraph cg = compile(random_dag(seed, 10));
    REQUIRE(cg.fast_ok);
    for (long k = 0; k <= 37; ++k) {
      std::vector<int> fast, exact;
      REQUIRE(detail::realized_path_ids_fast(cg, k, 37, fast));
      detail::realized_path_ids(cg, Rat(k, 37), exact);
      CHECK(fast == exact);
    }
  }
}

TEST_CASE("interval intersection handles flags") {
  Interval a = Interval::make(0, true, Rat(1, 2), false);
  Interval b = Interval::make(Rat(1, 4), true, 1, true);
  CHECK(a.intersect(b) == Interval::make(Rat(1, 4), true, Rat(1, 2), false));
  Interval c = Interval::make(Rat(1, 2), true, 1, true);
  CHECK(a.intersect(c).is_empty);
  Interval d = Interval::closed(Rat(1, 2), Rat(1, 2));
  CHECK(c.intersect(d) == Interval::closed(Rat(1, 2), Rat(1, 2)));
  CHECK(!d.is_empty);
  CHECK(d.contains(Rat(1, 2)));
}
