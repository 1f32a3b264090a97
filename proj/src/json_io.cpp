#include "planner/json_io.hpp"

#include <fstream>

namespace planner {

namespace {

json z_json(const mpz_class& z) {
  if (z.fits_slong_p()) {
    long v = z.get_si();
    if (v > -(1L << 53) && v < (1L << 53)) return json(v);
  }
  return json(z.get_str());
}

mpz_class z_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  fail(Errc::parse, "expected integer or integer string");
}

}  // namespace

json rat_json(const Rat& v) { return json{{"num", z_json(v.get_num())}, {"den", z_json(v.get_den())}}; }

Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(mpz_class(static_cast<long>(j.get<long long>())));
  if (j.is_object() && j.contains("num") && j.contains("den")) {
    mpz_class den = z_from_json(j.at("den"));
    if (den == 0) fail(Errc::parse, "zero denominator");
    Rat out(z_from_json(j.at("num")), den);
    out.canonicalize();
    return out;
  }
  fail(Errc::parse, "expected rational (string, integer or {num,den})");
}

json graph_to_json(const TaskGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges)
    edges.push_back({{"from", e.from}, {"to", e.to}, {"cost", rat_str(e.cost)}});
  json out{{"nodes", g.nodes}, {"edges", edges}, {"s", g.s}, {"t", g.t}};
  if (g.reward) out["reward"] = rat_str(*g.reward);
  if (g.allow_zero_cost) out["allow_zero_cost"] = true;
  return out;
}

TaskGraph graph_from_json(const json& j) {
  TaskGraph g;
  if (!j.is_object()) fail(Errc::parse, "graph document must be a JSON object");
  for (const auto& n : j.at("nodes")) g.nodes.push_back(n.get<std::string>());
  for (const auto& e : j.at("edges"))
    g.edges.push_back({e.at("from").get<std::string>(), e.at("to").get<std::string>(),
                       rat_from_json(e.at("cost"))});
  g.s = j.at("s").get<std::string>();
  g.t = j.at("t").get<std::string>();
  if (j.contains("reward")) g.reward = rat_from_json(j.at("reward"));
  if (j.contains("allow_zero_cost")) g.allow_zero_cost = j.at("allow_zero_cost").get<bool>();
  return g;
}

TaskGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Errc::parse, path + ": " + e.what());
  }
  return graph_from_json(j);
}

void save_graph(const TaskGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::parse, "cannot write " + path);
  out << graph_to_json(g).dump(2) << "\n";
}

json traversal_to_json(const Traversal& tr) {
  json plans = json::array();
  for (const PlanStep& p : tr.plans)
    plans.push_back(
        {{"node", p.node}, {"plan", p.plan}, {"biased_cost", rat_json(p.biased_cost)}});
  json out{{"outcome", tr.outcome == Outcome::reached ? "reached" : "abandoned"},
           {"realized_path", tr.realized_path},
           {"total_cost", rat_json(tr.total_cost)},
           {"plans", plans}};
  if (tr.outcome == Outcome::abandoned) out["stopped_at"] = tr.stopped_at;
  return out;
}

Traversal traversal_from_json(const json& j) {
  Traversal tr;
  tr.outcome = j.at("outcome").get<std::string>() == "reached" ? Outcome::reached
                                                               : Outcome::abandoned;
  for (const auto& n : j.at("realized_path")) tr.realized_path.push_back(n.get<std::string>());
  tr.total_cost = rat_from_json(j.at("total_cost"));
  for (const auto& p : j.at("plans")) {
    PlanStep step;
    step.node = p.at("node").get<std::string>();
    for (const auto& n : p.at("plan")) step.plan.push_back(n.get<std::string>());
    step.biased_cost = rat_from_json(p.at("biased_cost"));
    tr.plans.push_back(std::move(step));
  }
  if (j.contains("stopped_at")) tr.stopped_at = j.at("stopped_at").get<std::string>();
  return tr;
}

json interval_json(const Interval& iv) {
  if (iv.is_empty) return json{{"empty", true}};
  return json{{"lo", rat_str(iv.lo)},
              {"hi", rat_str(iv.hi)},
              {"lo_closed", iv.lo_closed},
              {"hi_closed", iv.hi_closed}};
}

Interval interval_from_json(const json& j) {
  if (j.contains("empty") && j.at("empty").get<bool>()) return Interval::empty();
  return Interval::make(parse_rat(j.at("lo").get<std::string>()),
                        j.at("lo_closed").get<bool>(),
                        parse_rat(j.at("hi").get<std::string>()),
                        j.at("hi_closed").get<bool>());
}

json labeled_instance_to_json(const LabeledInstance& inst) {
  json labels = json::array();
  for (const auto& [key, iv] : inst.labels) {
    json row = interval_json(iv);
    row["from"] = key.first;
    row["to"] = key.second;
    labels.push_back(row);
  }
  return json{{"graph", graph_to_json(inst.g)}, {"labels", labels}};
}

LabeledInstance labeled_instance_from_json(const json& j) {
  LabeledInstance inst;
  inst.g = graph_from_json(j.at("graph"));
  for (const auto& row : j.at("labels"))
    inst.labels[{row.at("from").get<std::string>(), row.at("to").get<std::string>()}] =
        interval_from_json(row);
  return inst;
}

json path_set_json(const ValidPathSet& vps) {
  json arr = json::array();
  for (std::size_t i = 0; i < vps.paths.size(); ++i)
    arr.push_back({{"id", i},
                   {"path", vps.paths[i].path},
                   {"interval", interval_json(vps.paths[i].witness)}});
  return json{{"count", vps.paths.size()}, {"paths", arr}};
}

json minor_model_json(const MinorModel& m) {
  return json{{"k", m.k}, {"segments", m.segments}, {"hub", m.hub}};
}

json motivation_report_json(const MotivationReport& rep) {
  return json{{"min_reward", rat_json(rep.min_reward)},
              {"peak_perceived", rat_json(rep.peak_perceived)},
              {"argmax_node", rep.argmax_node},
              {"peak_nodes", rep.peak_nodes},
              {"trace", traversal_to_json(rep.trace)}};
}

json structure_report_json(const StructureReport& rep) {
  json uncovered = json::array();
  for (const auto& [from, to] : rep.uncovered_edges)
    uncovered.push_back({{"from", from}, {"to", to}});
  return json{{"trunk", rep.trunk},
              {"edges_covered", rep.edges_covered},
              {"uncovered_edges", uncovered},
              {"off_trunk_out_degree_ok", rep.out_degree_ok},
              {"overloaded_nodes", rep.overloaded_nodes},
              {"pass", rep.pass()}};
}

json cert_json(const SubgraphCert& cert) {
  return json{{"subgraph", graph_to_json(cert.sub)},
              {"traversal", traversal_to_json(cert.traversal)},
              {"minimal", cert.minimal},
              {"structure", structure_report_json(cert.structure)}};
}

json partition_plan_json(const PartitionPlan& plan) {
  json steps = json::array(), bots = json::array();
  for (const Float& x : plan.steps) steps.push_back(x.str(20));
  for (const Float& b : plan.step_bottlenecks) bots.push_back(b.str(20));
  return json{{"total_cost", rat_json(plan.total)},
              {"reward", rat_json(plan.reward)},
              {"steps", steps},
              {"bottlenecks", bots},
              {"completion_rate", plan.rate.str(20)}};
}

}  // namespace planner
