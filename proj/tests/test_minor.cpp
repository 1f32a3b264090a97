#include <doctest.h>

#include "planner/instances.hpp"
#include "planner/minor.hpp"

using namespace planner;

namespace {

// exact floor(n * log_b(mu)): the largest m with b^m <= mu^n
long floor_log_pow(const Rat& b, const Rat& mu, int n) {
  Rat target = rat_pow(mu, n);
  long m = 0;
  while (rat_pow(b, m + 1) <= target) ++m;
  return m;
}

}  // namespace

TEST_CASE("ranks on the exponential chain") {
  TaskGraph g = gen_exponential(5, Rat(3, 2), true);
  RankProfile rp = rank_profile(g, Bias{Rat(1, 2)});
  CHECK(rp.rank.at("v0") == 0);
  // (3/2)^5 = 243/32: between 2^2 and 2^3
  CHECK(rp.rank.at("v5") == 3);
  CHECK(rp.rank.at("t") == 0);
}

TEST_CASE("ranks on the demo graph are all zero at beta = 1/2") {
  RankProfile rp = rank_profile(demo_graph(), Bias{Rat(1, 2)});
  for (const auto& [node, r] : rp.rank) CHECK(r == 0);
}

TEST_CASE("beta = 1 leaves far nodes unranked but the realized path at rank 0") {
  TaskGraph g;
  g.nodes = {"s", "a", "t"};
  g.edges = {{"s", "t", 1}, {"s", "a", 100}, {"a", "t", 100}};
  g.s = "s";
  g.t = "t";
  RankProfile rp = rank_profile(g, Bias{Rat(1)});
  CHECK(!rp.rank.at("a").has_value());
  CHECK(rp.rank.at("s") == 0);
  CHECK(check_rank_steps(g, Bias{Rat(1)}) == std::nullopt);
}

TEST_CASE("rank steps never exceed +1 along realized paths") {
  CHECK(check_rank_steps(gen_exponential(8, Rat(3, 2), true), Bias{Rat(1, 2)}) == std::nullopt);
  CHECK(check_rank_steps(demo_graph(), Bias{Rat(1, 2)}) == std::nullopt);
  for (unsigned long long seed : {71ULL, 73ULL, 79ULL, 83ULL})
    for (const Rat& b : {Rat(1, 3), Rat(1, 2), Rat(9, 10), Rat(1)})
      CHECK(check_rank_steps(random_dag(seed, 10), Bias{b}) == std::nullopt);
}

TEST_CASE("fan extraction on the exponential chain verifies") {
  CompiledGraph cg = compile(gen_exponential(10, Rat(19, 10), true));
  auto model = extract_fan_minor(cg, Bias{Rat(1, 2)});
  REQUIRE(model.has_value());
  CHECK(model->k >= 2);
  CHECK(verify_minor(cg.g, *model) == std::nullopt);
  CHECK(model->segments.size() == static_cast<std::size_t>(model->k) + 1);
}

TEST_CASE("no fan on flat instances") {
  TaskGraph single;
  single.nodes = {"s", "t"};
  single.edges = {{"s", "t", 1}};
  single.s = "s";
  single.t = "t";
  CHECK(!extract_fan_minor(single, Bias{Rat(1, 2)}).has_value());
  CHECK(!extract_fan_minor(demo_graph(), Bias{Rat(1, 2)}).has_value());
}

TEST_CASE("extracted k tracks n * log_b(mu)") {
  for (int n = 6; n <= 30; n += 4) {
    CompiledGraph cg = compile(gen_exponential(n, Rat(19, 10), true));
    auto model = extract_fan_minor(cg, Bias{Rat(1, 2)});
    REQUIRE(model.has_value());
    CHECK(model->k >= floor_log_pow(Rat(2), Rat(19, 10), n) - 1);
    CHECK(verify_minor(cg.g, *model) == std::nullopt);
  }
}

TEST_CASE("verify_minor names violations") {
  CompiledGraph cg = compile(gen_exponential(6, Rat(19, 10), true));
  auto model = extract_fan_minor(cg, Bias{Rat(1, 2)});
  REQUIRE(model.has_value());

  MinorModel overlapping = *model;
  overlapping.segments[1] = overlapping.segments[0];
  auto v1 = verify_minor(cg.g, overlapping);
  REQUIRE(v1.has_value());
  CHECK(v1->find("overlap") != std::string::npos);

  MinorModel bad_hub = *model;
  bad_hub.hub = {"v0"};  // overlaps segment 0 as well, but disjointness fires first
  CHECK(verify_minor(cg.g, bad_hub).has_value());

  // hub that is disjoint but misses every adjacency: impossible on the chain,
  // so build it on the demo graph by hand
  MinorModel fake;
  fake.k = 2;
  fake.segments = {{"s"}, {"c"}, {"e"}};
  fake.hub = {"a"};  // a touches s but not c or e
  auto v2 = verify_minor(demo_graph(), fake);
  REQUIRE(v2.has_value());
  CHECK(v2->find("hub") != std::string::npos);

  MinorModel disconnected;
  disconnected.k = 2;
  disconnected.segments = {{"s"}, {"c"}, {"d", "b"}};  // b-d not adjacent
  disconnected.hub = {"e"};
  auto v3 = verify_minor(demo_graph(), disconnected);
  REQUIRE(v3.has_value());
  CHECK(v3->find("connected") != std::string::npos);
}

TEST_CASE("extraction output always verifies on random instances") {
  int found = 0;
  for (unsigned long long seed = 100; seed < 140; ++seed) {
    CompiledGraph cg = compile(random_dag(seed, 10));
    for (const Rat& b : {Rat(1, 5), Rat(1, 2)}) {
      auto model = extract_fan_minor(cg, Bias{b});
      if (!model) continue;
      ++found;
      CHECK(verify_minor(cg.g, *model) == std::nullopt);
    }
  }
  // random small-cost DAGs rarely produce rank >= 2, but the exponential
  // family above guarantees the positive cases are exercised
  (void)found;
}

TEST_CASE("rank_profile needs d(s,t) > 0") {
  TaskGraph g;
  g.nodes = {"s", "t"};
  g.edges = {{"s", "t", 0}};
  g.s = "s";
  g.t = "t";
  g.allow_zero_cost = true;
  CHECK_THROWS_AS(rank_profile(g, Bias{Rat(1, 2)}), Error);
}
