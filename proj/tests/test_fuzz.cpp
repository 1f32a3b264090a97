#include <doctest.h>

#include "planner/fuzz.hpp"

using namespace planner;

TEST_CASE("fuzz corpus is deterministic") {
  auto a = fuzz_corpus(0, 10, 8), b = fuzz_corpus(0, 10, 8);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].nodes == b[i].nodes);
    REQUIRE(a[i].edges.size() == b[i].edges.size());
    for (std::size_t e = 0; e < a[i].edges.size(); ++e) {
      CHECK(a[i].edges[e].from == b[i].edges[e].from);
      CHECK(a[i].edges[e].cost == b[i].edges[e].cost);
    }
  }
  auto c = fuzz_corpus(1, 10, 8);
  bool any_diff = false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].nodes != c[i].nodes || a[i].edges.size() != c[i].edges.size()) any_diff = true;
  CHECK(any_diff);
}

TEST_CASE("the invariant suite is clean on a fresh corpus") {
  FuzzConfig cfg;
  cfg.seed = 0;
  cfg.count = 25;
  cfg.max_nodes = 8;
  cfg.write_repro = false;
  FuzzResult res = run_fuzz(cfg);
  CHECK(res.violations == 0);
  CHECK(res.report.find("violations=0") != std::string::npos);
}

TEST_CASE("fuzz reports are byte-identical across runs and thread modes") {
  FuzzConfig cfg;
  cfg.seed = 7;
  cfg.count = 15;
  cfg.max_nodes = 8;
  cfg.write_repro = false;
  FuzzResult a = run_fuzz(cfg), b = run_fuzz(cfg);
  CHECK(a.report == b.report);
  cfg.exec = Exec::serial;
  FuzzResult c = run_fuzz(cfg);
  CHECK(a.report == c.report);
}
