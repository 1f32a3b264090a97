#pragma once

#include <json.hpp>
#include <string>

#include "planner/agent.hpp"
#include "planner/instances.hpp"
#include "planner/minor.hpp"
#include "planner/motivation.hpp"
#include "planner/parametric.hpp"
#include "planner/partition.hpp"

namespace planner {

using nlohmann::json;

// {"num": p, "den": q}; components serialize as JSON integers when they fit
// in 53 bits and as exact strings otherwise. The parser also accepts "p/q"
// strings and plain integers.
json rat_json(const Rat& v);
Rat rat_from_json(const json& j);

// Graph files: {"nodes": [...], "edges": [{"from","to","cost"}], "s", "t",
// optional "reward", optional "allow_zero_cost"}. Costs are exact strings.
json graph_to_json(const TaskGraph& g);
TaskGraph graph_from_json(const json& j);
TaskGraph load_graph(const std::string& path);
void save_graph(const TaskGraph& g, const std::string& path);

json traversal_to_json(const Traversal& tr);
Traversal traversal_from_json(const json& j);

json interval_json(const Interval& iv);
Interval interval_from_json(const json& j);

// Interval Labels instance: {"graph": ..., "labels": [{"from","to",interval}]}
json labeled_instance_to_json(const LabeledInstance& inst);
LabeledInstance labeled_instance_from_json(const json& j);

json path_set_json(const ValidPathSet& vps);
json minor_model_json(const MinorModel& m);
json motivation_report_json(const MotivationReport& rep);
json structure_report_json(const StructureReport& rep);
json cert_json(const SubgraphCert& cert);
json partition_plan_json(const PartitionPlan& plan);

}  // namespace planner
