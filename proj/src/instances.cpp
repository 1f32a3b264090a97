#include "planner/instances.hpp"

#include <random>

namespace planner {

namespace {

std::string padded(const std::string& prefix, int i) {
  std::string d = std::to_string(i);
  if (d.size() < 2) d.insert(d.begin(), '0');
  return prefix + d;
}

}  // namespace

TaskGraph demo_graph() {
  TaskGraph g;
  g.nodes = {"s", "a", "b", "c", "d", "e", "t"};
  g.edges = {{"s", "a", 16}, {"a", "b", 2}, {"b", "t", 2},  {"s", "c", 8},
             {"c", "d", 8},  {"d", "t", 8}, {"c", "e", 2},  {"e", "t", 16}};
  g.s = "s";
  g.t = "t";
  return g;
}

TaskGraph gen_akerlof(int n, const Cost& c, const Cost& x) {
  if (n < 0) fail(Errc::parameter, "akerlof: n must be >= 0");
  if (c <= 0 || x <= 0) fail(Errc::parameter, "akerlof: c and x must be positive");
  TaskGraph g;
  for (int i = 0; i <= n; ++i) g.nodes.push_back("v" + std::to_string(i));
  g.nodes.push_back("t");
  for (int i = 0; i < n; ++i)
    g.edges.push_back({"v" + std::to_string(i), "v" + std::to_string(i + 1), x});
  for (int i = 0; i <= n; ++i) g.edges.push_back({"v" + std::to_string(i), "t", c});
  g.s = "v0";
  g.t = "t";
  return g;
}

TaskGraph gen_exponential(int n, const Rat& mu, bool allow_zero) {
  if (n < 1) fail(Errc::parameter, "exponential: n must be >= 1");
  if (mu <= 1) fail(Errc::parameter, "exponential: mu must be > 1");
  if (!allow_zero)
    fail(Errc::parameter, "exponential: needs the zero-cost flag for its forward edges");
  TaskGraph g;
  g.allow_zero_cost = true;
  for (int i = 0; i <= n; ++i) g.nodes.push_back("v" + std::to_string(i));
  g.nodes.push_back("t");
  for (int i = 0; i < n; ++i)
    g.edges.push_back({"v" + std::to_string(i), "v" + std::to_string(i + 1), 0});
  for (int i = 0; i <= n; ++i)
    g.edges.push_back({"v" + std::to_string(i), "t", rat_pow(mu, i)});
  g.s = "v0";
  g.t = "t";
  return g;
}

TaskGraph gen_exponential_eps(int n, const Rat& mu, const Rat& eps, const Bias& bias) {
  if (n < 1) fail(Errc::parameter, "exponential: n must be >= 1");
  if (mu <= 1) fail(Errc::parameter, "exponential: mu must be > 1");
  if (eps <= 0) fail(Errc::parameter, "exponential: eps must be positive");
  for (int j = 0; j < n; ++j) {
    // forward step must stay the biased favorite: eps + beta*mu^(j+1) < mu^j
    if (!(eps + bias.beta * rat_pow(mu, j + 1) < rat_pow(mu, j)))
      fail(Errc::precision_violation,
           "eps too large: biased forward step loses at j=" + std::to_string(j));
  }
  TaskGraph g;
  for (int i = 0; i <= n; ++i) g.nodes.push_back("v" + std::to_string(i));
  g.nodes.push_back("t");
  for (int i = 0; i < n; ++i)
    g.edges.push_back({"v" + std::to_string(i), "v" + std::to_string(i + 1), eps});
  for (int i = 0; i <= n; ++i)
    g.edges.push_back({"v" + std::to_string(i), "t", rat_pow(mu, i)});
  g.s = "v0";
  g.t = "t";
  return g;
}

TaskGraph gen_course(int weeks, int projects, const std::vector<Cost>& drop_costs,
                     const Cost& reward) {
  if (projects < 1 || weeks < projects)
    fail(Errc::parameter, "course: need weeks >= projects >= 1");
  if (weeks > 9 || projects > 9) fail(Errc::parameter, "course: at most 9 weeks/projects");
  if (drop_costs.empty()) fail(Errc::parameter, "course: need at least one row cost");
  for (const Cost& c : drop_costs)
    if (c <= 0) fail(Errc::parameter, "course: costs must be positive");

  auto name = [](int i, int j) { return "v" + std::to_string(i) + std::to_string(j); };
  TaskGraph g;
  for (int i = 0; i <= weeks; ++i)
    for (int j = 0; j <= projects; ++j) g.nodes.push_back(name(i, j));
  for (int i = 0; i < weeks; ++i)
    for (int j = 0; j <= projects; ++j)
      for (int k = 0; j + k <= projects && k < static_cast<int>(drop_costs.size()); ++k)
        g.edges.push_back({name(i, j), name(i + 1, j + k), drop_costs[k]});
  g.s = name(0, 0);
  g.t = name(weeks, projects);
  g.reward = reward;
  validate(g);
  return prune_to_st(g);
}

IntervalLabeling LabeledInstance::to_labeling(const CompiledGraph& cg) const {
  IntervalLabeling lab;
  lab.by_edge.reserve(cg.g.edges.size());
  for (const Edge& e : cg.g.edges) {
    auto it = labels.find({e.from, e.to});
    if (it == labels.end()) fail(Errc::parameter, "no label for edge " + e.from + "->" + e.to);
    lab.by_edge.push_back(it->second);
  }
  return lab;
}

LabeledInstance gen_bipartite_labels(int n) {
  if (n < 1 || n > 99) fail(Errc::parameter, "bipartite: n must be in 1..99");
  LabeledInstance inst;
  TaskGraph& g = inst.g;
  g.nodes.push_back("s");
  for (int i = 1; i <= n; ++i) g.nodes.push_back(padded("u", i));
  for (int j = 1; j <= n; ++j) g.nodes.push_back(padded("v", j));
  g.nodes.push_back("t");
  g.s = "s";
  g.t = "t";

  const Rat n1(1, n), n2(Rat(1, n) / n);
  for (int i = 1; i <= n; ++i) {
    g.edges.push_back({"s", padded("u", i), 1});
    // [ (i-1)/n, i/n ), last one closed at 1
    inst.labels[{"s", padded("u", i)}] =
        Interval::make(Rat(i - 1) * n1, true, Rat(i) * n1, i == n);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      g.edges.push_back({padded("u", i), padded("v", j), 1});
      // [ (i-1)/n + (j-1)/n^2, (i-1)/n + j/n^2 ), widened to cover [0,1]
      Rat lo = Rat(i - 1) * n1 + Rat(j - 1) * n2;
      Rat hi = Rat(i - 1) * n1 + Rat(j) * n2;
      if (j == 1) lo = 0;
      if (j == n) hi = 1;
      inst.labels[{padded("u", i), padded("v", j)}] = Interval::make(lo, true, hi, j == n);
    }
  for (int j = 1; j <= n; ++j) {
    g.edges.push_back({padded("v", j), "t", 1});
    inst.labels[{padded("v", j), "t"}] = Interval::closed(0, 1);
  }
  return inst;
}

TaskGraph gen_bipartite_costs(int n) {
  if (n < 1 || n > 99) fail(Errc::parameter, "bipartite: n must be in 1..99");
  TaskGraph g;
  g.nodes.push_back("s");
  for (int i = 1; i <= n; ++i) g.nodes.push_back(padded("u", i));
  for (int j = 1; j <= n; ++j) g.nodes.push_back(padded("v", j));
  g.nodes.push_back("t");
  g.s = "s";
  g.t = "t";

  // Exit costs fall by n^2 per row, so d(v_j, t) decreases in j and every
  // line at u_i reaches the envelope; c(u_i, v_j) increments are chosen to
  // put the u_i breakpoints at (i-1)/n + j/n^2 and the s breakpoints at i/n.
  const mpz_class nn = mpz_class(n) * n;
  Cost c_su(1);
  for (int i = 1; i <= n; ++i) {
    g.edges.push_back({"s", padded("u", i), c_su});
    c_su += i;
  }
  for (int i = 1; i <= n; ++i) {
    Cost c_uv(nn * n - (i - 1) * nn);
    for (int j = 1; j <= n; ++j) {
      g.edges.push_back({padded("u", i), padded("v", j), c_uv});
      c_uv += (i - 1) * n + j;
    }
  }
  for (int j = 1; j <= n; ++j)
    g.edges.push_back({padded("v", j), "t", Cost((n - j + 1) * nn)});
  return g;
}

TaskGraph random_dag(unsigned long long seed, int max_nodes) {
  if (max_nodes < 2 || max_nodes > 99) fail(Errc::parameter, "random_dag: max_nodes in 2..99");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    int n = 2 + static_cast<int>(rng() % static_cast<unsigned long long>(max_nodes - 1));
    TaskGraph g;
    for (int i = 0; i < n; ++i) g.nodes.push_back(padded("n", i));
    g.s = g.nodes.front();
    g.t = g.nodes.back();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (rng() % 100 >= 45) continue;
        long num = 1 + static_cast<long>(rng() % 12);
        long den = (rng() % 4 == 0) ? 2 : 1;
        Rat c(num, den);
        c.canonicalize();
        g.edges.push_back({g.nodes[i], g.nodes[j], c});
      }
    try {
      return prune_to_st(g);
    } catch (const Error&) {
      continue;  // no s-t path this time; redraw
    }
  }
  // random fill never connects s to t only on tiny node budgets
  TaskGraph g;
  g.nodes = {"n00", "n01"};
  g.s = "n00";
  g.t = "n01";
  g.edges = {{"n00", "n01", 1}};
  return g;
}

}  // namespace planner
