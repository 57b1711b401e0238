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

// Domain model for placing service function chains (VNFs plus virtual
// security functions) onto server nodes.
//
// A PlacementProblem bundles the server topology, the instance catalog, the
// interaction edges with their latency tolerances and the security policy.
// The functions at the bottom of this header are the single definition of
// what a feasible placement is and what it costs; every solver in the
// library is checked against them.

#ifndef VSFPLACE_MODEL_H_
#define VSFPLACE_MODEL_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace vsfplace {

// Latencies are whole microseconds throughout.
using Micros = int64_t;

struct ResourceVector {
  int64_t cpu = 0;
  int64_t memory = 0;

  ResourceVector& operator+=(const ResourceVector& o) {
    cpu += o.cpu;
    memory += o.memory;
    return *this;
  }
  ResourceVector& operator-=(const ResourceVector& o) {
    cpu -= o.cpu;
    memory -= o.memory;
    return *this;
  }
  friend ResourceVector operator+(ResourceVector a, const ResourceVector& b) {
    return a += b;
  }
  friend ResourceVector operator-(ResourceVector a, const ResourceVector& b) {
    return a -= b;
  }
  friend bool operator==(const ResourceVector&, const ResourceVector&) = default;

  // Component-wise <=.
  bool FitsWithin(const ResourceVector& capacity) const {
    return cpu <= capacity.cpu && memory <= capacity.memory;
  }
  bool NonNegative() const { return cpu >= 0 && memory >= 0; }
};

struct ServerNode {
  std::string id;
  ResourceVector capacity;

  friend bool operator==(const ServerNode&, const ServerNode&) = default;
};

struct Topology {
  std::vector<ServerNode> nodes;
  // latency[i][j] between nodes[i] and nodes[j]; symmetric, zero diagonal.
  std::vector<std::vector<Micros>> latency;

  friend bool operator==(const Topology&, const Topology&) = default;
};

enum class InstanceKind { kVnf, kVsf };

const char* InstanceKindName(InstanceKind kind);
std::optional<InstanceKind> ParseInstanceKind(std::string_view name);

struct InstanceSpec {
  std::string id;
  InstanceKind kind = InstanceKind::kVnf;
  // Free-form role label such as "MME" or "DPI".
  std::string function;
  ResourceVector demand;

  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

struct InteractionEdge {
  std::string a;
  std::string b;
  // nullopt means the edge carries traffic but has no latency bound.
  std::optional<Micros> tolerance;

  friend bool operator==(const InteractionEdge&,
                         const InteractionEdge&) = default;
};

// Unordered instance pair; used both for conflict pairs and for referring to
// an interaction edge by its endpoints.
using InstancePair = std::pair<std::string, std::string>;

struct SecurityPolicy {
  // Redundancy rule: members of a group must sit on pairwise distinct nodes.
  std::vector<std::vector<std::string>> anti_affinity_groups;
  // Conflict rule: the two instances must not share a node. Enforced exactly
  // like a two-member anti-affinity group but kept apart for reporting.
  std::vector<InstancePair> conflict_pairs;
  // Alliance rule: all members share one node.
  std::vector<std::vector<std::string>> colocation_groups;
  // Proximity rule: edges whose tolerance encodes a closest-proximity bound.
  std::vector<InstancePair> proximity_edges;

  friend bool operator==(const SecurityPolicy&,
                         const SecurityPolicy&) = default;
};

struct PlacementProblem {
  Topology topology;
  std::vector<InstanceSpec> instances;
  std::vector<InteractionEdge> edges;
  SecurityPolicy policy;

  friend bool operator==(const PlacementProblem&,
                         const PlacementProblem&) = default;
};

struct Placement {
  // instance id -> node id; total over the problem's instances.
  std::map<std::string, std::string> assignment;

  friend bool operator==(const Placement&, const Placement&) = default;
};

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

enum class ValidationCode {
  kDuplicateNodeId,
  kDuplicateInstanceId,
  kNegativeCapacity,
  kNegativeDemand,
  kLatencyShape,
  kNegativeLatency,
  kNonZeroDiagonal,
  kAsymmetricLatency,
  kUnknownInstance,
  kSelfEdge,
  kDuplicateEdge,
  kNegativeTolerance,
  kDuplicateGroupMember,
  kSelfConflict,
  kUnknownEdgeRef,
  kPolicyContradiction,
};

const char* ValidationCodeName(ValidationCode code);

struct ValidationError {
  ValidationCode code;
  // Offending ids (nodes or instances), in the order they were found.
  std::vector<std::string> subjects;
  std::string message;

  // e.g. "AsymmetricLatency(n1,n2)".
  std::string ToString() const;
};

// Empty iff the problem is well-formed. Overlapping colocation groups are
// merged before the contradiction check, so a separation between two
// instances that are colocated only transitively is reported as well.
std::vector<ValidationError> ValidateProblem(const PlacementProblem& problem);

class InvalidProblemError : public std::invalid_argument {
 public:
  explicit InvalidProblemError(std::vector<ValidationError> errors);
  const std::vector<ValidationError>& errors() const { return errors_; }

 private:
  std::vector<ValidationError> errors_;
};

// Thrown when a placement or edge names an instance or node the problem does
// not know, or when a placement is not total.
class ReferenceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Index form
// ---------------------------------------------------------------------------

// Dense, index-based view of a validated problem. Instances and nodes are
// numbered in input order. All solvers work on this view.
class ProblemIndex {
 public:
  struct Edge {
    int a;
    int b;
    std::optional<Micros> tolerance;
  };
  // A pair that must not share a node.
  struct Separation {
    int a;
    int b;
    bool conflict;  // false: from an anti-affinity group
  };

  // Throws InvalidProblemError if ValidateProblem reports anything.
  explicit ProblemIndex(const PlacementProblem& problem);

  const PlacementProblem& problem() const { return problem_; }
  int num_instances() const { return static_cast<int>(demand_.size()); }
  int num_nodes() const { return static_cast<int>(capacity_.size()); }

  int InstanceIndex(const std::string& id) const;  // throws ReferenceError
  int NodeIndex(const std::string& id) const;      // throws ReferenceError
  int EdgeIndex(const InteractionEdge& edge) const;

  Micros latency(int n, int m) const { return latency_[n * num_nodes() + m]; }
  const ResourceVector& demand(int i) const { return demand_[i]; }
  const ResourceVector& capacity(int n) const { return capacity_[n]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Separation>& separations() const { return separations_; }
  // Colocation groups as index lists, exactly as declared (not merged).
  const std::vector<std::vector<int>>& colocation_groups() const {
    return colocation_groups_;
  }
  // Representative of the merged colocation class of instance i.
  int colocation_root(int i) const { return colocation_root_[i]; }

  Micros max_latency() const;

  // Converts between id-keyed placements and dense node-index vectors.
  std::vector<int> ToAssignment(const Placement& placement) const;
  Placement ToPlacement(std::span<const int> assignment) const;

 private:
  PlacementProblem problem_;
  std::unordered_map<std::string, int> instance_index_;
  std::unordered_map<std::string, int> node_index_;
  std::vector<Micros> latency_;
  std::vector<ResourceVector> demand_;
  std::vector<ResourceVector> capacity_;
  std::vector<Edge> edges_;
  std::vector<Separation> separations_;
  std::vector<std::vector<int>> colocation_groups_;
  std::vector<int> colocation_root_;
};

// ---------------------------------------------------------------------------
// Feasibility and objective
// ---------------------------------------------------------------------------

enum class ViolationKind {
  kToleranceExceeded,
  kAntiAffinity,
  kConflict,
  kColocation,
  kCapacityExceeded,
};

const char* ViolationKindName(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  // Instance ids involved (edge endpoints, separated pair, or the colocation
  // group's first member followed by the stray member).
  std::vector<std::string> instances;
  // Node where the breach happens; empty for tolerance and colocation.
  std::string node;
  // Resource name for capacity breaches ("cpu" or "mem").
  std::string resource;
  // Measured vs. permitted amount (latency, load) where that applies.
  int64_t actual = 0;
  int64_t limit = 0;

  friend bool operator==(const Violation&, const Violation&) = default;

  // e.g. "AntiAffinity(IDS-1,IDS-2,n1)" or "CapacityExceeded(n1,cpu,5>4)".
  std::string ToString() const;
};

Micros EdgeLatency(const PlacementProblem& problem, const Placement& placement,
                   const InteractionEdge& edge);

// Sum of EdgeLatency over the declared interaction edges, each unordered
// edge counted once. Pairs without an edge contribute nothing.
Micros EvaluateObjective(const PlacementProblem& problem,
                         const Placement& placement);

// One record per breach: each edge over tolerance, each separated pair sharing
// a node, each colocation member away from its group's first member, and each
// (node, resource) over capacity. Empty iff the placement is feasible.
std::vector<Violation> CheckFeasibility(const PlacementProblem& problem,
                                        const Placement& placement);

// Index-based forms of the two functions above. `assignment[i]` is the node
// index of instance i.
Micros EvaluateObjective(const ProblemIndex& index,
                         std::span<const int> assignment);
std::vector<Violation> CheckFeasibility(const ProblemIndex& index,
                                        std::span<const int> assignment);
bool IsFeasible(const ProblemIndex& index, std::span<const int> assignment);

// ---------------------------------------------------------------------------
// Solve reports
// ---------------------------------------------------------------------------

enum class SolveStatus {
  kOptimal,     // proven optimal (exact solver, oracle)
  kPlaced,      // heuristic placement; may carry violations (greedy)
  kInfeasible,  // no placement exists (or, for greedy, first-fit got stuck)
  kTimeLimit,   // stopped early; placement holds the incumbent if any
};

const char* SolveStatusName(SolveStatus status);

struct EdgeLatencyEntry {
  std::string a;
  std::string b;
  Micros latency = 0;

  friend bool operator==(const EdgeLatencyEntry&,
                         const EdgeLatencyEntry&) = default;
};

struct SolveStats {
  uint64_t nodes_explored = 0;
  double wall_seconds = 0.0;
};

struct SolveReport {
  std::string solver;
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<Placement> placement;
  // Sum of edge_latencies; 0 when there is no placement.
  Micros objective = 0;
  std::vector<EdgeLatencyEntry> edge_latencies;
  std::vector<Violation> violations;
  SolveStats stats;
};

// Fills objective, edge_latencies and violations from `assignment`.
SolveReport MakeReport(const ProblemIndex& index, std::string solver,
                       SolveStatus status, std::span<const int> assignment,
                       SolveStats stats);
SolveReport MakeEmptyReport(std::string solver, SolveStatus status,
                            SolveStats stats);

}  // namespace vsfplace

#endif  // VSFPLACE_MODEL_H_
