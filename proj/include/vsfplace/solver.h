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

// Exact latency-minimal placement by depth-first branch and bound.
//
// Each search node fixes some instances to nodes and keeps, for every other
// instance, the set of nodes it may still take. Propagation shrinks those
// sets using capacity, separation, colocation and edge-tolerance rules; a
// lower bound on the remaining latency prunes subtrees that cannot beat the
// incumbent. The search explores bound ties as well so that, among optimal
// placements, the lexicographically smallest node-index vector (instances in
// input order) is returned.

#ifndef VSFPLACE_SOLVER_H_
#define VSFPLACE_SOLVER_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "vsfplace/model.h"

namespace vsfplace {

enum class InstanceOrder { kInputOrder, kMostConstrainedFirst };
enum class NodeOrder { kInputOrder, kCheapestBoundFirst };

struct SolverConfig {
  // Seconds; nullopt disables the limit. Must be > 0 when set.
  std::optional<double> time_limit_seconds;
  InstanceOrder instance_order = InstanceOrder::kMostConstrainedFirst;
  NodeOrder node_order = NodeOrder::kCheapestBoundFirst;
};

// Returned by bounds when no completion of a search node can be feasible.
inline constexpr Micros kInfiniteBound = std::numeric_limits<Micros>::max();

class SearchNode {
 public:
  SearchNode(int num_instances, int num_nodes);

  int num_instances() const { return static_cast<int>(assignment_.size()); }
  int num_nodes() const { return num_nodes_; }

  bool assigned(int i) const { return assignment_[i] >= 0; }
  // Node index, or -1 while unassigned.
  int node_of(int i) const { return assignment_[i]; }
  const std::vector<int>& assignment() const { return assignment_; }
  bool complete() const { return num_assigned_ == num_instances(); }

  bool InDomain(int i, int n) const { return domain_[i * num_nodes_ + n] != 0; }
  int domain_size(int i) const { return domain_size_[i]; }
  std::vector<int> Domain(int i) const;
  const ResourceVector& residual(int n) const { return residual_[n]; }

  // Fixes instance i on node n and charges its demand to n. Requires n to be
  // in i's domain.
  void Assign(int i, int n, const ResourceVector& demand);
  // Returns true if n was in the domain.
  bool Remove(int i, int n);
  // Narrows i's domain to {n} without assigning it.
  void RestrictTo(int i, int n);

 private:
  friend class SearchSpace;
  int num_nodes_;
  int num_assigned_ = 0;
  std::vector<int> assignment_;
  std::vector<uint8_t> domain_;
  std::vector<int> domain_size_;
  std::vector<ResourceVector> residual_;
};

// Precomputed adjacency for one problem plus the propagation and bounding
// rules that operate on SearchNodes of that problem.
class SearchSpace {
 public:
  explicit SearchSpace(const ProblemIndex& index);

  const ProblemIndex& index() const { return *index_; }

  // All domains full, nothing assigned, residual = capacity. Not propagated.
  SearchNode Root() const;

  // Removes every domain value that would break capacity, a separation or
  // colocation rule, or a finite edge tolerance, repeating until nothing
  // changes. Only values that belong to no feasible completion are removed.
  // Returns false on a dead end (some domain became empty).
  bool Propagate(SearchNode& node) const;

  // Sum over edges of the cheapest latency the two endpoints can still
  // realise given the current domains. Never exceeds the objective of any
  // feasible completion; exact on complete nodes.
  Micros LowerBound(const SearchNode& node) const;

  // Alternative admissible bound that ties all edges of an unassigned
  // instance to a single node choice: every unassigned instance pays its
  // cheapest node, each edge between two unassigned instances being split
  // evenly between its endpoints.
  Micros InstanceBound(const SearchNode& node) const;

  // max(LowerBound, InstanceBound); what the solver prunes with.
  Micros Bound(const SearchNode& node) const;

  bool separated(int a, int b) const {
    return separated_[a * index_->num_instances() + b] != 0;
  }
  bool colocated(int a, int b) const {
    return index_->colocation_root(a) == index_->colocation_root(b);
  }

 private:
  struct Neighbor {
    int other;
    std::optional<Micros> tolerance;
  };

  // Cheapest latency for edge endpoints (a at n, b anywhere allowed).
  Micros CheapestPartner(const SearchNode& node, int a, int n, int b,
                         const std::optional<Micros>& tolerance) const;
  bool PairAllowed(const SearchNode& node, int a, int n, int b, int m,
                   const std::optional<Micros>& tolerance) const;

  const ProblemIndex* index_;
  std::vector<std::vector<Neighbor>> neighbors_;
  std::vector<std::vector<int>> separated_from_;
  std::vector<std::vector<int>> colocation_class_;
  std::vector<uint8_t> separated_;
};

// Throws InvalidProblemError for an invalid problem and std::invalid_argument
// for a non-positive time limit.
SolveReport Solve(const PlacementProblem& problem, const SolverConfig& config);
SolveReport Solve(const ProblemIndex& index, const SolverConfig& config);

}  // namespace vsfplace

#endif  // VSFPLACE_SOLVER_H_
