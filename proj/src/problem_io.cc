// Copyright 2026 The vsfplace Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vsfplace/problem_io.h"

#include <fstream>
#include <sstream>

namespace vsfplace {
namespace {

const Json& Member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(where + ": missing key '" + key + "'");
  }
  return *it;
}

int64_t Integer(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) {
    throw ParseError(where + ": expected an integer");
  }
  return v.get<int64_t>();
}

std::string String(const Json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": expected a string");
  return v.get<std::string>();
}

const Json& Array(const Json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  return v;
}

std::vector<std::string> IdList(const Json& v, const std::string& where) {
  std::vector<std::string> ids;
  for (const auto& item : Array(v, where)) ids.push_back(String(item, where));
  return ids;
}

InstancePair IdPair(const Json& v, const std::string& where) {
  auto ids = IdList(v, where);
  if (ids.size() != 2) throw ParseError(where + ": expected two ids");
  return {ids[0], ids[1]};
}

Json PairToJson(const InstancePair& p) { return Json::array({p.first, p.second}); }

}  // namespace

PlacementProblem ProblemFromJson(const Json& doc) {
  PlacementProblem problem;
  const Json& topology = Member(doc, "topology", "problem");
  for (const auto& node : Array(Member(topology, "nodes", "topology"),
                                "topology.nodes")) {
    const std::string where = "topology.nodes[]";
    problem.topology.nodes.push_back(
        {String(Member(node, "id", where), where + ".id"),
         {Integer(Member(node, "cpu", where), where + ".cpu"),
          Integer(Member(node, "mem", where), where + ".mem")}});
  }
  for (const auto& row : Array(Member(topology, "latency", "topology"),
                               "topology.latency")) {
    std::vector<Micros> values;
    for (const auto& v : Array(row, "topology.latency[]")) {
      values.push_back(Integer(v, "topology.latency[][]"));
    }
    problem.topology.latency.push_back(std::move(values));
  }

  for (const auto& inst : Array(Member(doc, "instances", "problem"),
                                "instances")) {
    const std::string where = "instances[]";
    const std::string kind_name =
        String(Member(inst, "kind", where), where + ".kind");
    auto kind = ParseInstanceKind(kind_name);
    if (!kind) {
      throw ParseError(where + ".kind: expected \"VNF\" or \"VSF\", got \"" +
                       kind_name + "\"");
    }
    problem.instances.push_back(
        {String(Member(inst, "id", where), where + ".id"), *kind,
         String(Member(inst, "function", where), where + ".function"),
         {Integer(Member(inst, "cpu", where), where + ".cpu"),
          Integer(Member(inst, "mem", where), where + ".mem")}});
  }

  for (const auto& edge : Array(Member(doc, "edges", "problem"), "edges")) {
    const std::string where = "edges[]";
    InteractionEdge e{String(Member(edge, "a", where), where + ".a"),
                      String(Member(edge, "b", where), where + ".b"),
                      std::nullopt};
    if (auto it = edge.find("tolerance"); it != edge.end() && !it->is_null()) {
      e.tolerance = Integer(*it, where + ".tolerance");
    }
    problem.edges.push_back(std::move(e));
  }

  if (auto it = doc.find("policy"); it != doc.end()) {
    const Json& policy = *it;
    if (!policy.is_object()) throw ParseError("policy: expected an object");
    if (auto g = policy.find("antiAffinity"); g != policy.end()) {
      for (const auto& group : Array(*g, "policy.antiAffinity")) {
        problem.policy.anti_affinity_groups.push_back(
            IdList(group, "policy.antiAffinity[]"));
      }
    }
    if (auto g = policy.find("conflicts"); g != policy.end()) {
      for (const auto& pair : Array(*g, "policy.conflicts")) {
        problem.policy.conflict_pairs.push_back(
            IdPair(pair, "policy.conflicts[]"));
      }
    }
    if (auto g = policy.find("colocate"); g != policy.end()) {
      for (const auto& group : Array(*g, "policy.colocate")) {
        problem.policy.colocation_groups.push_back(
            IdList(group, "policy.colocate[]"));
      }
    }
    if (auto g = policy.find("proximity"); g != policy.end()) {
      for (const auto& pair : Array(*g, "policy.proximity")) {
        problem.policy.proximity_edges.push_back(
            IdPair(pair, "policy.proximity[]"));
      }
    }
  }
  return problem;
}

Json ProblemToJson(const PlacementProblem& problem) {
  Json nodes = Json::array();
  for (const auto& node : problem.topology.nodes) {
    nodes.push_back({{"id", node.id},
                     {"cpu", node.capacity.cpu},
                     {"mem", node.capacity.memory}});
  }
  Json latency = Json::array();
  for (const auto& row : problem.topology.latency) latency.push_back(row);

  Json instances = Json::array();
  for (const auto& inst : problem.instances) {
    instances.push_back({{"id", inst.id},
                         {"kind", InstanceKindName(inst.kind)},
                         {"function", inst.function},
                         {"cpu", inst.demand.cpu},
                         {"mem", inst.demand.memory}});
  }
  Json edges = Json::array();
  for (const auto& edge : problem.edges) {
    Json e = {{"a", edge.a}, {"b", edge.b}, {"tolerance", nullptr}};
    if (edge.tolerance) e["tolerance"] = *edge.tolerance;
    edges.push_back(std::move(e));
  }

  const SecurityPolicy& p = problem.policy;
  Json anti = Json::array();
  for (const auto& g : p.anti_affinity_groups) anti.push_back(g);
  Json conflicts = Json::array();
  for (const auto& pair : p.conflict_pairs) conflicts.push_back(PairToJson(pair));
  Json colocate = Json::array();
  for (const auto& g : p.colocation_groups) colocate.push_back(g);
  Json proximity = Json::array();
  for (const auto& pair : p.proximity_edges) proximity.push_back(PairToJson(pair));

  Json doc;
  doc["topology"] = {{"nodes", std::move(nodes)}, {"latency", std::move(latency)}};
  doc["instances"] = std::move(instances);
  doc["edges"] = std::move(edges);
  doc["policy"] = {{"antiAffinity", std::move(anti)},
                   {"conflicts", std::move(conflicts)},
                   {"colocate", std::move(colocate)},
                   {"proximity", std::move(proximity)}};
  return doc;
}

Placement PlacementFromJson(const Json& doc) {
  const Json& assignment = Member(doc, "assignment", "placement");
  if (!assignment.is_object()) {
    throw ParseError("placement.assignment: expected an object");
  }
  Placement placement;
  for (const auto& [instance, node] : assignment.items()) {
    placement.assignment[instance] =
        String(node, "placement.assignment." + instance);
  }
  return placement;
}

Json PlacementToJson(const Placement& placement,
                     const PlacementProblem* order) {
  Json assignment = Json::object();
  if (order != nullptr) {
    for (const auto& inst : order->instances) {
      if (auto it = placement.assignment.find(inst.id);
          it != placement.assignment.end()) {
        assignment[inst.id] = it->second;
      }
    }
  }
  for (const auto& [instance, node] : placement.assignment) {
    if (!assignment.contains(instance)) assignment[instance] = node;
  }
  return Json{{"assignment", std::move(assignment)}};
}

Json ReportToJson(const SolveReport& report, const PlacementProblem& problem) {
  Json doc;
  doc["solver"] = report.solver;
  doc["status"] = SolveStatusName(report.status);
  doc["feasible"] = report.placement.has_value() && report.violations.empty();
  if (report.placement) {
    doc["objective_us"] = report.objective;
    doc["assignment"] =
        PlacementToJson(*report.placement, &problem)["assignment"];
  } else {
    doc["objective_us"] = nullptr;
    doc["assignment"] = nullptr;
  }
  Json edges = Json::array();
  for (const auto& e : report.edge_latencies) {
    edges.push_back({{"a", e.a}, {"b", e.b}, {"latency_us", e.latency}});
  }
  doc["edge_latencies"] = std::move(edges);
  Json violations = Json::array();
  for (const auto& v : report.violations) violations.push_back(v.ToString());
  doc["violations"] = std::move(violations);
  doc["stats"] = {{"nodes_explored", report.stats.nodes_explored}};
  return doc;
}

namespace {

Json ParseJsonText(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

PlacementProblem ParseProblem(std::string_view text) {
  return ProblemFromJson(ParseJsonText(text));
}

std::string SerializeProblem(const PlacementProblem& problem) {
  return DumpJson(ProblemToJson(problem));
}

Placement ParsePlacement(std::string_view text) {
  return PlacementFromJson(ParseJsonText(text));
}

std::string DumpJson(const Json& doc) { return doc.dump(2) + "\n"; }

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace vsfplace
