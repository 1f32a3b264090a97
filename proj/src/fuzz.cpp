#include "planner/fuzz.hpp"

#include <algorithm>
#include <sstream>

#include "planner/agent.hpp"
#include "planner/instances.hpp"
#include "planner/json_io.hpp"
#include "planner/minor.hpp"
#include "planner/motivation.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace planner {

namespace {

unsigned long long splitmix64(unsigned long long x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// exhaustive v-t path costs; the graphs are small enough to enumerate
void all_path_costs(const CompiledGraph& cg, int v, Rat acc, std::vector<Rat>& out) {
  if (v == cg.t) {
    out.push_back(acc);
    return;
  }
  for (const CompiledGraph::Arc& a : cg.out[v])
    all_path_costs(cg, a.head, acc + cg.g.edges[a.edge].cost, out);
}

// biased cost of every explicit v-t path
void all_biased_costs(const CompiledGraph& cg, int v, const Rat& beta, bool first, Rat acc,
                      std::vector<Rat>& out) {
  if (v == cg.t) {
    out.push_back(acc);
    return;
  }
  for (const CompiledGraph::Arc& a : cg.out[v]) {
    const Rat& c = cg.g.edges[a.edge].cost;
    all_biased_costs(cg, a.head, beta, false, acc + (first ? c : Rat(beta * c)), out);
  }
}

struct Failures {
  std::vector<std::string> msgs;
  void add(const std::string& check, const std::string& what) {
    msgs.push_back("[" + check + "] " + what);
  }
};

}  // namespace

std::vector<TaskGraph> fuzz_corpus(unsigned long long seed, int count, int max_nodes) {
  std::vector<TaskGraph> out(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < count; ++i)
    out[i] = random_dag(splitmix64(seed ^ (0x51ED270B * static_cast<unsigned long long>(i) + 1)),
                        max_nodes);
  return out;
}

std::vector<std::string> check_instance(const TaskGraph& g, const FuzzConfig& cfg) {
  Failures fails;
  CompiledGraph cg;
  try {
    validate(g);
    TaskGraph pruned = prune_to_st(g);
    if (pruned.nodes != g.nodes || pruned.edges.size() != g.edges.size())
      fails.add("prune", "corpus instance not fixed by pruning");
    cg = compile(g);
  } catch (const Error& e) {
    fails.add("compile", e.what());
    return fails.msgs;
  }

  // exact distances vs exhaustive path enumeration
  for (std::size_t v = 0; v < cg.names.size(); ++v) {
    std::vector<Rat> costs;
    all_path_costs(cg, static_cast<int>(v), Rat(0), costs);
    if (costs.empty()) {
      fails.add("dist", "no path from " + cg.names[v]);
      continue;
    }
    if (*std::min_element(costs.begin(), costs.end()) != cg.dist[v])
      fails.add("dist", "d(" + cg.names[v] + ",t) disagrees with enumeration");
  }
  // relaxation: d(v) <= c(v,w) + d(w), tight along canon_next
  for (std::size_t e = 0; e < cg.g.edges.size(); ++e) {
    if (cg.dist[cg.tail[e]] > cg.g.edges[e].cost + cg.dist[cg.head[e]])
      fails.add("dist", "relaxation violated on " + cg.g.edges[e].from + "->" + cg.g.edges[e].to);
  }

  const std::vector<Rat> betas{Rat(1, 3), Rat(1, 2), Rat(9, 10), Rat(1)};
  for (const Rat& b : betas) {
    Bias bias(b);
    // plan oracle: biased cost equals the explicit minimum over all paths
    for (std::size_t v = 0; v < cg.names.size(); ++v) {
      if (static_cast<int>(v) == cg.t) continue;
      std::vector<Rat> biased;
      all_biased_costs(cg, static_cast<int>(v), b, true, Rat(0), biased);
      Rat expect = *std::min_element(biased.begin(), biased.end());
      if (perceived_cost(cg, cg.names[v], bias) != expect)
        fails.add("plan-oracle", "perceived cost at " + cg.names[v] + " off at beta=" + rat_str(b));
    }

    Traversal walk = traverse_fixed_goal(cg, bias);
    for (std::size_t i = 0; i + 1 < walk.realized_path.size(); ++i)
      if (walk.plans[i].plan.size() < 2 || walk.plans[i].plan[1] != walk.realized_path[i + 1])
        fails.add("traversal", "step " + std::to_string(i) + " leaves the recorded plan");
    if (b == 1 && walk.total_cost != cg.dist[cg.s])
      fails.add("traversal", "unbiased agent missed the shortest path");
    if (walk.total_cost < cg.dist[cg.s]) fails.add("traversal", "cost ratio below 1");

    if (auto viol = check_rank_steps(cg, bias))
      fails.add("rank-steps", "rank jumps by more than 1 on " + viol->from + "->" + viol->to);
    if (auto model = extract_fan_minor(cg, bias))
      if (auto bad = verify_minor(cg.g, *model)) fails.add("minor", *bad);

    // reward model: threshold exactness and choice independence
    MotivationReport rep = min_motivating_reward(cg, bias);
    if (rep.trace.outcome != Outcome::reached)
      fails.add("reward", "agent quits at the minimum motivating reward");
    if (rep.min_reward > 0) {
      Traversal shy = traverse_with_reward(cg, bias, rep.min_reward - Rat(1, 1000000));
      if (shy.outcome != Outcome::abandoned)
        fails.add("reward", "agent survives strictly below the minimum reward");
    }
    for (const Rat& f : {Rat(1, 2), Rat(1)}) {
      Traversal part = traverse_with_reward(cg, bias, rep.min_reward * f);
      if (part.realized_path.size() > walk.realized_path.size() ||
          !std::equal(part.realized_path.begin(), part.realized_path.end(),
                      walk.realized_path.begin()))
        fails.add("reward", "reward changed the edge choices, not just the stopping point");
    }
  }

  // kernel vs exact reference on a handful of betas
  if (cg.fast_ok)
    for (long k : {1L, 3L, 7L, 9L}) {
      std::vector<int> fast, exact;
      if (detail::realized_path_ids_fast(cg, k, 10, fast)) {
        detail::realized_path_ids(cg, Rat(k, 10), exact);
        if (fast != exact) fails.add("kernel", "int64 walk diverges at beta=" + rat_str(Rat(k, 10)));
      }
    }

  // sweep vs grid simulation
  try {
    ValidPathSet vps = enumerate_beta_paths(cg);
    check_path_set(cg, vps);
    if (vps.paths.size() > cg.g.edges.size()) fails.add("sweep", "more paths than edges");
    auto oracle = brute_force_beta_paths(cg, cfg.resolution, Exec::serial);
    std::set<std::vector<std::string>> swept;
    for (const PathInterval& pi : vps.paths) swept.insert(pi.path);
    if (swept != oracle) fails.add("sweep", "path set disagrees with the beta grid");
  } catch (const Error& e) {
    fails.add("sweep", e.what());
  }

  // minimal motivating subgraphs and their structure
  try {
    Bias bias{Rat(1, 2)};
    MotivationReport rep = min_motivating_reward(cg, bias);
    TaskGraph minimal = minimize_motivating(cg.g, bias, rep.min_reward);
    if (!is_minimal_motivating(minimal, bias, rep.min_reward))
      fails.add("motivation", "greedy minimization is not minimal");
    StructureReport sr = check_minimal_structure(minimal, bias, rep.min_reward);
    if (!sr.pass()) fails.add("motivation", "minimal subgraph fails the sparsity audit");

    if (static_cast<int>(cg.g.edges.size()) <= cfg.search_max_edges) {
      Cost r2 = rep.min_reward * Rat(9, 10);
      SearchOptions opts;
      opts.max_edges = cfg.search_max_edges;
      if (auto cert = find_motivating_subgraph(cg.g, bias, r2, opts)) {
        TaskGraph m2 = minimize_motivating(cert->sub, bias, r2);
        StructureReport sr2 = check_minimal_structure(m2, bias, r2);
        if (!sr2.pass()) fails.add("motivation", "searched subgraph fails the sparsity audit");
        if (!is_minimal_motivating(m2, bias, r2))
          fails.add("motivation", "minimized search result is not minimal");
      }
      // kernel-vs-reference spot check on a few subsets
      SubsetSim sim(cg, bias, r2);
      uint64_t all = sim.full_mask();
      for (uint64_t probe :
           {all, all >> 1, all & ~uint64_t(2), all & ~uint64_t(5), (all >> 2) | uint64_t(1)}) {
        bool fast = sim.motivates(probe);
        std::vector<int> keep;
        for (int e = 0; e < static_cast<int>(cg.g.edges.size()); ++e)
          if (probe >> e & 1) keep.push_back(e);
        bool slow;
        try {
          slow = traverse_with_reward(compile(subgraph_by_edges(cg.g, keep)), bias, r2).outcome ==
                 Outcome::reached;
        } catch (const Error& e) {
          slow = false;
          if (e.code() != Errc::no_path) throw;
        }
        if (fast != slow) fails.add("motivation", "subset kernel diverges from the reference");
      }
    }
  } catch (const Error& e) {
    fails.add("motivation", e.what());
  }

  return fails.msgs;
}

FuzzResult run_fuzz(const FuzzConfig& cfg) {
  std::vector<TaskGraph> corpus = fuzz_corpus(cfg.seed, cfg.count, cfg.max_nodes);
  std::vector<std::vector<std::string>> failures(corpus.size());

  if (cfg.exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < static_cast<int>(corpus.size()); ++i)
      failures[i] = check_instance(corpus[i], cfg);
  } else {
    for (std::size_t i = 0; i < corpus.size(); ++i) failures[i] = check_instance(corpus[i], cfg);
  }

  std::ostringstream out;
  out << "fuzz report\n";
  out << "seed=" << cfg.seed << " count=" << cfg.count << " max-nodes=" << cfg.max_nodes
      << " resolution=" << cfg.resolution << " search-max-edges=" << cfg.search_max_edges
      << "\n";
  int bad = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (failures[i].empty()) continue;
    bad += static_cast<int>(failures[i].size());
    std::string repro;
    if (cfg.write_repro) {
      repro = cfg.repro_prefix + "-" + std::to_string(i) + ".json";
      save_graph(corpus[i], repro);
    }
    for (const std::string& f : failures[i]) {
      out << "instance " << i << " " << f;
      if (!repro.empty()) out << " (repro: " << repro << ")";
      out << "\n";
    }
  }
  out << "instances=" << corpus.size() << " violations=" << bad << "\n";
  return {out.str(), bad};
}

}  // namespace planner
