// biased-planner: generate task-graph instances, trace present-biased agents,
// sweep beta ranges, extract fan minors, analyze motivating rewards and
// subgraphs, and plan task partitions. JSON in, human/JSON/CSV out.
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "planner/fuzz.hpp"
#include "planner/json_io.hpp"

using namespace planner;

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(output);
  if (!f) fail(Errc::parse, "cannot write " + output);
  f << text;
  if (!text.empty() && text.back() != '\n') f << "\n";
}

std::string trace_human(const Traversal& tr) {
  std::ostringstream out;
  for (const PlanStep& p : tr.plans)
    out << "at " << p.node << " plan " << join(p.plan, "-") << " biased_cost "
        << rat_str(p.biased_cost) << "\n";
  if (tr.outcome == Outcome::reached)
    out << "outcome reached\n";
  else
    out << "outcome abandoned at " << tr.stopped_at << "\n";
  out << "path " << join(tr.realized_path, "-") << "\n";
  out << "total_cost " << rat_str(tr.total_cost) << "\n";
  return out.str();
}

Cost pick_reward(const TaskGraph& g, const std::string& flag, const char* who) {
  if (!flag.empty()) return parse_rat(flag);
  if (g.reward) return *g.reward;
  fail(Errc::parameter, std::string(who) + " needs --reward or a reward in the graph file");
}

int default_max_edges() {
  if (const char* env = std::getenv("BIASED_PLANNER_MAX_EDGES")) {
    try {
      return std::stoi(env);
    } catch (...) {
      fail(Errc::parameter, "BIASED_PLANNER_MAX_EDGES is not an integer");
    }
  }
  return 16;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"present-biased agents on task graphs"};
  app.require_subcommand(1);

  std::string graph_file, labels_file, output, format = "human";
  std::string beta_s, reward_s;

  // gen
  auto* gen = app.add_subcommand("gen", "emit a named instance family as JSON");
  std::string family;
  int n = 5, weeks = 3, projects = 2, k_steps = 2;
  std::string c_s = "10", x_s = "1", mu_s = "3/2", eps_s = "1/100", costs_s = "1,4,9";
  gen->add_option("--family", family,
                  "demo|akerlof|exponential|exponential-eps|course|bipartite-labels|bipartite-costs")
      ->required();
  gen->add_option("--n", n, "size parameter");
  gen->add_option("--c", c_s, "exit cost (akerlof) / task cost (partition)");
  gen->add_option("--x", x_s, "forward cost (akerlof)");
  gen->add_option("--mu", mu_s, "exit growth factor (exponential)");
  gen->add_option("--eps", eps_s, "forward cost (exponential-eps)");
  gen->add_option("--beta", beta_s, "bias for the exponential-eps validity check");
  gen->add_option("--weeks", weeks, "course weeks");
  gen->add_option("--projects", projects, "course projects");
  gen->add_option("--costs", costs_s, "course per-row-drop costs, comma separated");
  gen->add_option("--reward", reward_s, "reward to attach");
  gen->add_option("-o,--output", output, "output file (default stdout)");

  // simulate
  auto* sim = app.add_subcommand("simulate", "trace one agent through a graph");
  bool fixed_goal = false;
  sim->add_option("--graph", graph_file)->required();
  sim->add_option("--beta", beta_s)->required();
  sim->add_option("--reward", reward_s, "reward model; omit for fixed-goal");
  sim->add_flag("--fixed-goal", fixed_goal, "ignore any reward attached to the graph");
  sim->add_option("--format", format, "human|json");
  sim->add_option("-o,--output", output);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "all agent paths across beta in [0,1]");
  sweep->add_option("--graph", graph_file, "task graph with costs");
  sweep->add_option("--labels", labels_file, "explicit interval-labels instance");
  sweep->add_option("--format", format, "human|json|csv");
  sweep->add_option("-o,--output", output);

  // minor
  auto* minor_cmd = app.add_subcommand("minor", "extract and verify a fan minor");
  minor_cmd->add_option("--graph", graph_file)->required();
  minor_cmd->add_option("--beta", beta_s)->required();
  minor_cmd->add_option("--format", format, "human|json");
  minor_cmd->add_option("-o,--output", output);

  // motivate
  auto* motiv = app.add_subcommand("motivate", "minimum motivating reward report");
  motiv->add_option("--graph", graph_file)->required();
  motiv->add_option("--beta", beta_s)->required();
  motiv->add_option("--reward", reward_s, "also simulate at this reward");
  motiv->add_option("--format", format, "human|json");
  motiv->add_option("-o,--output", output);

  // subgraph
  auto* sub = app.add_subcommand("subgraph", "search for a motivating subgraph");
  int max_edges = default_max_edges();
  sub->add_option("--graph", graph_file)->required();
  sub->add_option("--beta", beta_s)->required();
  sub->add_option("--reward", reward_s);
  sub->add_option("--max-edges", max_edges, "exhaustive search bound");
  sub->add_option("--format", format, "human|json");
  sub->add_option("-o,--output", output);

  // partition
  auto* part = app.add_subcommand("partition", "optimal k-step split of one task");
  std::string r_s = "4";
  part->add_option("--c", c_s, "task cost")->required();
  part->add_option("--r", r_s, "reward")->required();
  part->add_option("--k", k_steps, "number of steps")->required();
  part->add_option("--format", format, "human|json|csv");
  part->add_option("-o,--output", output);

  // fuzz
  auto* fuzz = app.add_subcommand("fuzz", "random-instance invariant suite");
  FuzzConfig fc;
  bool no_repro = false, serial = false;
  fuzz->add_option("--seed", fc.seed);
  fuzz->add_option("--count", fc.count);
  fuzz->add_option("--max-nodes", fc.max_nodes);
  fuzz->add_option("--resolution", fc.resolution);
  fuzz->add_option("--search-max-edges", fc.search_max_edges);
  fuzz->add_flag("--no-repro", no_repro, "do not write reproducer files");
  fuzz->add_flag("--serial", serial, "single-threaded run");
  fuzz->add_option("-o,--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) {
      if (family == "demo") {
        emit(graph_to_json(demo_graph()).dump(2), output);
      } else if (family == "akerlof") {
        emit(graph_to_json(gen_akerlof(n, parse_rat(c_s), parse_rat(x_s))).dump(2), output);
      } else if (family == "exponential") {
        emit(graph_to_json(gen_exponential(n, parse_rat(mu_s), true)).dump(2), output);
      } else if (family == "exponential-eps") {
        Bias bias(beta_s.empty() ? Rat(1, 2) : parse_rat(beta_s));
        emit(graph_to_json(gen_exponential_eps(n, parse_rat(mu_s), parse_rat(eps_s), bias))
                 .dump(2),
             output);
      } else if (family == "course") {
        std::vector<Cost> costs;
        std::stringstream ss(costs_s);
        for (std::string item; std::getline(ss, item, ',');) costs.push_back(parse_rat(item));
        Cost r = reward_s.empty() ? Cost(16) : parse_rat(reward_s);
        emit(graph_to_json(gen_course(weeks, projects, costs, r)).dump(2), output);
      } else if (family == "bipartite-labels") {
        emit(labeled_instance_to_json(gen_bipartite_labels(n)).dump(2), output);
      } else if (family == "bipartite-costs") {
        emit(graph_to_json(gen_bipartite_costs(n)).dump(2), output);
      } else {
        fail(Errc::parameter, "unknown family: " + family);
      }
    } else if (sim->parsed()) {
      TaskGraph g = load_graph(graph_file);
      Bias bias(parse_rat(beta_s));
      Traversal tr;
      if (!reward_s.empty())
        tr = traverse_with_reward(g, bias, parse_rat(reward_s));
      else if (g.reward && !fixed_goal)
        tr = traverse_with_reward(g, bias, *g.reward);
      else
        tr = traverse_fixed_goal(g, bias);
      emit(format == "json" ? traversal_to_json(tr).dump(2) : trace_human(tr), output);
    } else if (sweep->parsed()) {
      CompiledGraph cg;
      ValidPathSet vps;
      if (!labels_file.empty()) {
        std::ifstream in(labels_file);
        if (!in) fail(Errc::parse, "cannot open " + labels_file);
        json j;
        in >> j;
        LabeledInstance inst = labeled_instance_from_json(j);
        cg = compile(inst.g);
        vps = enumerate_valid_paths(cg, inst.to_labeling(cg));
      } else if (!graph_file.empty()) {
        cg = compile(load_graph(graph_file));
        vps = enumerate_beta_paths(cg);
      } else {
        fail(Errc::parameter, "sweep needs --graph or --labels");
      }
      if (format == "json") {
        emit(path_set_json(vps).dump(2), output);
      } else if (format == "csv") {
        std::ostringstream csv;
        csv << "id,lo,hi\n";
        for (std::size_t i = 0; i < vps.paths.size(); ++i)
          csv << i << "," << rat_decimal(vps.paths[i].witness.lo) << ","
              << rat_decimal(vps.paths[i].witness.hi) << "\n";
        emit(csv.str(), output);
      } else {
        std::ostringstream hum;
        for (std::size_t i = 0; i < vps.paths.size(); ++i)
          hum << i << ": " << join(vps.paths[i].path, "-") << "  "
              << interval_str(vps.paths[i].witness) << "\n";
        hum << vps.paths.size() << " paths\n";
        emit(hum.str(), output);
      }
    } else if (minor_cmd->parsed()) {
      TaskGraph g = load_graph(graph_file);
      Bias bias(parse_rat(beta_s));
      auto model = extract_fan_minor(g, bias);
      json j;
      if (model) {
        auto bad = verify_minor(prune_to_st(g), *model);
        j = minor_model_json(*model);
        j["verified"] = !bad;
        if (bad) j["violation"] = *bad;
      } else {
        j = {{"found", false}};
      }
      if (format == "json") {
        emit(j.dump(2), output);
      } else {
        std::ostringstream hum;
        if (!model) {
          hum << "no fan minor: the realized path never climbs two ranks\n";
        } else {
          hum << "fan F_" << model->k + 1 << " (k=" << model->k << ")\n";
          for (std::size_t i = 0; i < model->segments.size(); ++i)
            hum << "  R" << i << ": " << join(model->segments[i], " ") << "\n";
          hum << "  hub: " << join(model->hub, " ") << "\n";
          hum << "verified: " << (j["verified"].get<bool>() ? "ok" : j["violation"].get<std::string>())
              << "\n";
        }
        emit(hum.str(), output);
      }
    } else if (motiv->parsed()) {
      TaskGraph g = load_graph(graph_file);
      Bias bias(parse_rat(beta_s));
      MotivationReport rep = min_motivating_reward(g, bias);
      json j = motivation_report_json(rep);
      std::ostringstream hum;
      hum << "min_reward " << rat_str(rep.min_reward) << "\n";
      hum << "peak_perceived " << rat_str(rep.peak_perceived) << " at " << rep.argmax_node
          << " (peaks: " << join(rep.peak_nodes, " ") << ")\n";
      if (!reward_s.empty()) {
        Traversal at_r = traverse_with_reward(g, bias, parse_rat(reward_s));
        j["at_reward"] = traversal_to_json(at_r);
        hum << "at reward " << reward_s << ": "
            << (at_r.outcome == Outcome::reached ? "reached" : "abandoned at " + at_r.stopped_at)
            << "\n";
      }
      emit(format == "json" ? j.dump(2) : hum.str(), output);
    } else if (sub->parsed()) {
      TaskGraph g = load_graph(graph_file);
      Bias bias(parse_rat(beta_s));
      Cost r = pick_reward(g, reward_s, "subgraph");
      SearchOptions opts;
      opts.max_edges = max_edges;
      auto cert = find_motivating_subgraph(g, bias, r, opts);
      if (format == "json") {
        emit(cert ? cert_json(*cert).dump(2) : json{{"found", false}}.dump(2), output);
      } else {
        std::ostringstream hum;
        if (!cert) {
          hum << "no motivating subgraph at reward " << rat_str(r) << "\n";
        } else {
          hum << "motivating subgraph with " << cert->sub.edges.size() << " edges:\n";
          for (const Edge& e : cert->sub.edges)
            hum << "  " << e.from << " -> " << e.to << "  cost " << rat_str(e.cost) << "\n";
          hum << "trunk " << join(cert->structure.trunk, "-") << "\n";
          hum << "minimal " << (cert->minimal ? "yes" : "no") << "\n";
          hum << "structure " << (cert->structure.pass() ? "pass" : "fail") << "\n";
        }
        emit(hum.str(), output);
      }
    } else if (part->parsed()) {
      Cost c = parse_rat(c_s), r = parse_rat(r_s);
      PartitionPlan plan = optimal_partition(c, r, k_steps);
      if (format == "json") {
        emit(partition_plan_json(plan).dump(2), output);
      } else if (format == "csv") {
        std::ostringstream csv;
        csv << "k,completion_rate\n";
        for (int kk = 1; kk <= k_steps; ++kk)
          csv << kk << "," << optimal_partition(c, r, kk).rate.str(12) << "\n";
        emit(csv.str(), output);
      } else {
        std::ostringstream hum;
        hum << "cost " << rat_str(c) << " reward " << rat_str(r) << " k " << k_steps << "\n";
        for (std::size_t i = 0; i < plan.steps.size(); ++i)
          hum << "step " << i + 1 << ": " << plan.steps[i].str(12) << "  bottleneck "
              << plan.step_bottlenecks[i].str(12) << "\n";
        hum << "completion_rate " << plan.rate.str(12) << "\n";
        emit(hum.str(), output);
      }
    } else if (fuzz->parsed()) {
      fc.write_repro = !no_repro;
      fc.exec = serial ? Exec::serial : Exec::parallel;
      FuzzResult res = run_fuzz(fc);
      emit(res.report, output);
      return res.violations == 0 ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return 1;
  }
  return 0;
}
