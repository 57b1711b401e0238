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

#include "vsfplace/model.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace vsfplace {
namespace {

std::pair<std::string, std::string> Unordered(const std::string& a,
                                              const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

// Minimal union-find over instance indices.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // The smaller index becomes the root so representatives are stable.
  void Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<int> parent_;
};

std::string JoinSubjects(const std::vector<std::string>& subjects) {
  std::string out;
  for (size_t k = 0; k < subjects.size(); ++k) {
    if (k > 0) out += ',';
    out += subjects[k];
  }
  return out;
}

void AddError(std::vector<ValidationError>& errors, ValidationCode code,
              std::vector<std::string> subjects, std::string message) {
  errors.push_back({code, std::move(subjects), std::move(message)});
}

}  // namespace

const char* InstanceKindName(InstanceKind kind) {
  return kind == InstanceKind::kVnf ? "VNF" : "VSF";
}

std::optional<InstanceKind> ParseInstanceKind(std::string_view name) {
  if (name == "VNF") return InstanceKind::kVnf;
  if (name == "VSF") return InstanceKind::kVsf;
  return std::nullopt;
}

const char* ValidationCodeName(ValidationCode code) {
  switch (code) {
    case ValidationCode::kDuplicateNodeId: return "DuplicateNodeId";
    case ValidationCode::kDuplicateInstanceId: return "DuplicateInstanceId";
    case ValidationCode::kNegativeCapacity: return "NegativeCapacity";
    case ValidationCode::kNegativeDemand: return "NegativeDemand";
    case ValidationCode::kLatencyShape: return "LatencyShape";
    case ValidationCode::kNegativeLatency: return "NegativeLatency";
    case ValidationCode::kNonZeroDiagonal: return "NonZeroDiagonal";
    case ValidationCode::kAsymmetricLatency: return "AsymmetricLatency";
    case ValidationCode::kUnknownInstance: return "UnknownInstance";
    case ValidationCode::kSelfEdge: return "SelfEdge";
    case ValidationCode::kDuplicateEdge: return "DuplicateEdge";
    case ValidationCode::kNegativeTolerance: return "NegativeTolerance";
    case ValidationCode::kDuplicateGroupMember: return "DuplicateGroupMember";
    case ValidationCode::kSelfConflict: return "SelfConflict";
    case ValidationCode::kUnknownEdgeRef: return "UnknownEdgeRef";
    case ValidationCode::kPolicyContradiction: return "PolicyContradiction";
  }
  return "Unknown";
}

std::string ValidationError::ToString() const {
  return std::string(ValidationCodeName(code)) + "(" + JoinSubjects(subjects) +
         ")";
}

namespace {

std::string DescribeErrors(const std::vector<ValidationError>& errors) {
  std::string out = "invalid placement problem:";
  for (const auto& e : errors) out += " " + e.ToString();
  return out;
}

}  // namespace

InvalidProblemError::InvalidProblemError(std::vector<ValidationError> errors)
    : std::invalid_argument(DescribeErrors(errors)),
      errors_(std::move(errors)) {}

std::vector<ValidationError> ValidateProblem(const PlacementProblem& problem) {
  std::vector<ValidationError> errors;
  const auto& nodes = problem.topology.nodes;
  const auto& latency = problem.topology.latency;

  std::set<std::string> node_ids;
  for (const auto& node : nodes) {
    if (!node_ids.insert(node.id).second) {
      AddError(errors, ValidationCode::kDuplicateNodeId, {node.id},
               "node id appears more than once");
    }
    if (!node.capacity.NonNegative()) {
      AddError(errors, ValidationCode::kNegativeCapacity, {node.id},
               "node capacity must be non-negative");
    }
  }

  bool square = latency.size() == nodes.size();
  for (const auto& row : latency) square = square && row.size() == nodes.size();
  if (!square) {
    AddError(errors, ValidationCode::kLatencyShape, {},
             "latency matrix must be |nodes| x |nodes|");
  } else {
    for (size_t n = 0; n < nodes.size(); ++n) {
      if (latency[n][n] != 0) {
        AddError(errors, ValidationCode::kNonZeroDiagonal, {nodes[n].id},
                 "latency from a node to itself must be 0");
      }
      for (size_t m = 0; m < nodes.size(); ++m) {
        if (latency[n][m] < 0) {
          AddError(errors, ValidationCode::kNegativeLatency,
                   {nodes[n].id, nodes[m].id}, "latency must be >= 0");
        }
        if (m > n && latency[n][m] != latency[m][n]) {
          AddError(errors, ValidationCode::kAsymmetricLatency,
                   {nodes[n].id, nodes[m].id},
                   "latency matrix must be symmetric");
        }
      }
    }
  }

  std::unordered_map<std::string, int> instance_index;
  for (const auto& inst : problem.instances) {
    if (!instance_index
             .emplace(inst.id, static_cast<int>(instance_index.size()))
             .second) {
      AddError(errors, ValidationCode::kDuplicateInstanceId, {inst.id},
               "instance id appears more than once");
    }
    if (!inst.demand.NonNegative()) {
      AddError(errors, ValidationCode::kNegativeDemand, {inst.id},
               "instance demand must be non-negative");
    }
  }
  auto known = [&](const std::string& id) {
    if (instance_index.contains(id)) return true;
    AddError(errors, ValidationCode::kUnknownInstance, {id},
             "reference to an unknown instance");
    return false;
  };

  std::set<std::pair<std::string, std::string>> edge_keys;
  for (const auto& edge : problem.edges) {
    const bool ok_a = known(edge.a);
    const bool ok_b = known(edge.b);
    if (edge.a == edge.b) {
      AddError(errors, ValidationCode::kSelfEdge, {edge.a},
               "an interaction edge needs two distinct endpoints");
      continue;
    }
    if (edge.tolerance && *edge.tolerance < 0) {
      AddError(errors, ValidationCode::kNegativeTolerance, {edge.a, edge.b},
               "latency tolerance must be >= 0");
    }
    if (ok_a && ok_b && !edge_keys.insert(Unordered(edge.a, edge.b)).second) {
      AddError(errors, ValidationCode::kDuplicateEdge, {edge.a, edge.b},
               "at most one edge per instance pair");
    }
  }

  const SecurityPolicy& policy = problem.policy;
  // Separated pairs as index pairs, collected for the contradiction check.
  std::vector<std::pair<int, int>> separated;
  auto check_group = [&](const std::vector<std::string>& group,
                         bool separation) {
    std::set<std::string> seen;
    std::vector<int> members;
    for (const auto& id : group) {
      if (!seen.insert(id).second) {
        AddError(errors, ValidationCode::kDuplicateGroupMember, {id},
                 "an instance may appear only once per group");
        continue;
      }
      if (known(id)) members.push_back(instance_index.at(id));
    }
    if (separation) {
      for (size_t x = 0; x < members.size(); ++x) {
        for (size_t y = x + 1; y < members.size(); ++y) {
          separated.emplace_back(members[x], members[y]);
        }
      }
    }
    return members;
  };
  for (const auto& group : policy.anti_affinity_groups) check_group(group, true);
  for (const auto& [a, b] : policy.conflict_pairs) {
    if (a == b) {
      AddError(errors, ValidationCode::kSelfConflict, {a},
               "an instance cannot conflict with itself");
      continue;
    }
    check_group({a, b}, true);
  }

  DisjointSets colocated(static_cast<int>(problem.instances.size()));
  for (const auto& group : policy.colocation_groups) {
    const std::vector<int> members = check_group(group, false);
    for (size_t x = 1; x < members.size(); ++x) {
      colocated.Union(members[0], members[x]);
    }
  }
  std::set<std::pair<int, int>> reported;
  for (auto [a, b] : separated) {
    if (colocated.Find(a) != colocated.Find(b)) continue;
    if (b < a) std::swap(a, b);
    if (!reported.insert({a, b}).second) continue;
    AddError(errors, ValidationCode::kPolicyContradiction,
             {problem.instances[a].id, problem.instances[b].id},
             "instances are required to be both colocated and separated");
  }

  for (const auto& [a, b] : policy.proximity_edges) {
    if (!edge_keys.contains(Unordered(a, b))) {
      AddError(errors, ValidationCode::kUnknownEdgeRef, {a, b},
               "proximity entry does not name a declared edge");
    }
  }
  return errors;
}

// ---------------------------------------------------------------------------
// ProblemIndex
// ---------------------------------------------------------------------------

ProblemIndex::ProblemIndex(const PlacementProblem& problem)
    : problem_(problem) {
  if (auto errors = ValidateProblem(problem_); !errors.empty()) {
    throw InvalidProblemError(std::move(errors));
  }
  const int n_nodes = static_cast<int>(problem_.topology.nodes.size());
  for (int n = 0; n < n_nodes; ++n) {
    node_index_.emplace(problem_.topology.nodes[n].id, n);
    capacity_.push_back(problem_.topology.nodes[n].capacity);
  }
  latency_.reserve(static_cast<size_t>(n_nodes) * n_nodes);
  for (const auto& row : problem_.topology.latency) {
    latency_.insert(latency_.end(), row.begin(), row.end());
  }
  for (const auto& inst : problem_.instances) {
    instance_index_.emplace(inst.id, static_cast<int>(demand_.size()));
    demand_.push_back(inst.demand);
  }
  for (const auto& edge : problem_.edges) {
    edges_.push_back(
        {InstanceIndex(edge.a), InstanceIndex(edge.b), edge.tolerance});
  }
  for (const auto& group : problem_.policy.anti_affinity_groups) {
    for (size_t x = 0; x < group.size(); ++x) {
      for (size_t y = x + 1; y < group.size(); ++y) {
        separations_.push_back(
            {InstanceIndex(group[x]), InstanceIndex(group[y]), false});
      }
    }
  }
  for (const auto& [a, b] : problem_.policy.conflict_pairs) {
    separations_.push_back({InstanceIndex(a), InstanceIndex(b), true});
  }
  DisjointSets colocated(num_instances());
  for (const auto& group : problem_.policy.colocation_groups) {
    std::vector<int> members;
    for (const auto& id : group) members.push_back(InstanceIndex(id));
    for (size_t x = 1; x < members.size(); ++x) {
      colocated.Union(members[0], members[x]);
    }
    colocation_groups_.push_back(std::move(members));
  }
  colocation_root_.resize(num_instances());
  for (int i = 0; i < num_instances(); ++i) {
    colocation_root_[i] = colocated.Find(i);
  }
}

int ProblemIndex::InstanceIndex(const std::string& id) const {
  auto it = instance_index_.find(id);
  if (it == instance_index_.end()) {
    throw ReferenceError("unknown instance id '" + id + "'");
  }
  return it->second;
}

int ProblemIndex::NodeIndex(const std::string& id) const {
  auto it = node_index_.find(id);
  if (it == node_index_.end()) {
    throw ReferenceError("unknown node id '" + id + "'");
  }
  return it->second;
}

int ProblemIndex::EdgeIndex(const InteractionEdge& edge) const {
  const int a = InstanceIndex(edge.a);
  const int b = InstanceIndex(edge.b);
  for (size_t e = 0; e < edges_.size(); ++e) {
    if ((edges_[e].a == a && edges_[e].b == b) ||
        (edges_[e].a == b && edges_[e].b == a)) {
      return static_cast<int>(e);
    }
  }
  throw ReferenceError("no interaction edge between '" + edge.a + "' and '" +
                       edge.b + "'");
}

Micros ProblemIndex::max_latency() const {
  Micros best = 0;
  for (Micros l : latency_) best = std::max(best, l);
  return best;
}

std::vector<int> ProblemIndex::ToAssignment(const Placement& placement) const {
  std::vector<int> assignment(num_instances(), -1);
  for (const auto& [instance, node] : placement.assignment) {
    assignment[InstanceIndex(instance)] = NodeIndex(node);
  }
  for (int i = 0; i < num_instances(); ++i) {
    if (assignment[i] < 0) {
      throw ReferenceError("placement does not assign instance '" +
                           problem_.instances[i].id + "'");
    }
  }
  return assignment;
}

Placement ProblemIndex::ToPlacement(std::span<const int> assignment) const {
  Placement placement;
  for (int i = 0; i < num_instances(); ++i) {
    placement.assignment.emplace(problem_.instances[i].id,
                                 problem_.topology.nodes[assignment[i]].id);
  }
  return placement;
}

// ---------------------------------------------------------------------------
// Feasibility and objective
// ---------------------------------------------------------------------------

const char* ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kToleranceExceeded: return "ToleranceExceeded";
    case ViolationKind::kAntiAffinity: return "AntiAffinity";
    case ViolationKind::kConflict: return "Conflict";
    case ViolationKind::kColocation: return "Colocation";
    case ViolationKind::kCapacityExceeded: return "CapacityExceeded";
  }
  return "Unknown";
}

std::string Violation::ToString() const {
  std::ostringstream out;
  out << ViolationKindName(kind) << '(';
  switch (kind) {
    case ViolationKind::kToleranceExceeded:
      out << JoinSubjects(instances) << ',' << actual << '>' << limit;
      break;
    case ViolationKind::kAntiAffinity:
    case ViolationKind::kConflict:
      out << JoinSubjects(instances) << ',' << node;
      break;
    case ViolationKind::kColocation:
      out << JoinSubjects(instances);
      break;
    case ViolationKind::kCapacityExceeded:
      out << node << ',' << resource << ',' << actual << '>' << limit;
      break;
  }
  out << ')';
  return out.str();
}

Micros EdgeLatency(const PlacementProblem& problem, const Placement& placement,
                   const InteractionEdge& edge) {
  const ProblemIndex index(problem);
  const auto& e = index.edges()[index.EdgeIndex(edge)];
  const std::vector<int> assignment = index.ToAssignment(placement);
  return index.latency(assignment[e.a], assignment[e.b]);
}

Micros EvaluateObjective(const PlacementProblem& problem,
                         const Placement& placement) {
  const ProblemIndex index(problem);
  return EvaluateObjective(index, index.ToAssignment(placement));
}

std::vector<Violation> CheckFeasibility(const PlacementProblem& problem,
                                        const Placement& placement) {
  const ProblemIndex index(problem);
  return CheckFeasibility(index, index.ToAssignment(placement));
}

Micros EvaluateObjective(const ProblemIndex& index,
                         std::span<const int> assignment) {
  Micros total = 0;
  for (const auto& e : index.edges()) {
    total += index.latency(assignment[e.a], assignment[e.b]);
  }
  return total;
}

std::vector<Violation> CheckFeasibility(const ProblemIndex& index,
                                        std::span<const int> assignment) {
  const auto& problem = index.problem();
  const auto id = [&](int i) { return problem.instances[i].id; };
  const auto node_id = [&](int n) { return problem.topology.nodes[n].id; };
  std::vector<Violation> out;

  for (const auto& e : index.edges()) {
    if (!e.tolerance) continue;
    const Micros l = index.latency(assignment[e.a], assignment[e.b]);
    if (l > *e.tolerance) {
      out.push_back({ViolationKind::kToleranceExceeded, {id(e.a), id(e.b)}, "",
                     "", l, *e.tolerance});
    }
  }
  for (const auto& s : index.separations()) {
    if (assignment[s.a] != assignment[s.b]) continue;
    out.push_back({s.conflict ? ViolationKind::kConflict
                              : ViolationKind::kAntiAffinity,
                   {id(s.a), id(s.b)}, node_id(assignment[s.a]), "", 0, 0});
  }
  for (const auto& group : index.colocation_groups()) {
    for (size_t k = 1; k < group.size(); ++k) {
      if (assignment[group[k]] == assignment[group[0]]) continue;
      out.push_back({ViolationKind::kColocation, {id(group[0]), id(group[k])},
                     "", "", 0, 0});
    }
  }
  std::vector<ResourceVector> load(index.num_nodes());
  for (int i = 0; i < index.num_instances(); ++i) {
    load[assignment[i]] += index.demand(i);
  }
  for (int n = 0; n < index.num_nodes(); ++n) {
    const ResourceVector& cap = index.capacity(n);
    if (load[n].cpu > cap.cpu) {
      out.push_back({ViolationKind::kCapacityExceeded, {}, node_id(n), "cpu",
                     load[n].cpu, cap.cpu});
    }
    if (load[n].memory > cap.memory) {
      out.push_back({ViolationKind::kCapacityExceeded, {}, node_id(n), "mem",
                     load[n].memory, cap.memory});
    }
  }
  return out;
}

bool IsFeasible(const ProblemIndex& index, std::span<const int> assignment) {
  return CheckFeasibility(index, assignment).empty();
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

const char* SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kPlaced: return "placed";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kTimeLimit: return "time_limit";
  }
  return "unknown";
}

SolveReport MakeReport(const ProblemIndex& index, std::string solver,
                       SolveStatus status, std::span<const int> assignment,
                       SolveStats stats) {
  SolveReport report;
  report.solver = std::move(solver);
  report.status = status;
  report.stats = stats;
  report.placement = index.ToPlacement(assignment);
  const auto& problem = index.problem();
  for (const auto& e : index.edges()) {
    const Micros l = index.latency(assignment[e.a], assignment[e.b]);
    report.edge_latencies.push_back(
        {problem.instances[e.a].id, problem.instances[e.b].id, l});
    report.objective += l;
  }
  report.violations = CheckFeasibility(index, assignment);
  return report;
}

SolveReport MakeEmptyReport(std::string solver, SolveStatus status,
                            SolveStats stats) {
  SolveReport report;
  report.solver = std::move(solver);
  report.status = status;
  report.stats = stats;
  return report;
}

}  // namespace vsfplace
