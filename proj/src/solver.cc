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

#include "vsfplace/solver.h"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>

namespace vsfplace {
namespace {

Micros SaturatingAdd(Micros a, Micros b) {
  if (a == kInfiniteBound || b == kInfiniteBound) return kInfiniteBound;
  return a + b;
}

}  // namespace

// ---------------------------------------------------------------------------
// SearchNode
// ---------------------------------------------------------------------------

SearchNode::SearchNode(int num_instances, int num_nodes)
    : num_nodes_(num_nodes),
      assignment_(num_instances, -1),
      domain_(static_cast<size_t>(num_instances) * num_nodes, 1),
      domain_size_(num_instances, num_nodes),
      residual_(num_nodes) {}

std::vector<int> SearchNode::Domain(int i) const {
  std::vector<int> out;
  for (int n = 0; n < num_nodes_; ++n) {
    if (InDomain(i, n)) out.push_back(n);
  }
  return out;
}

void SearchNode::Assign(int i, int n, const ResourceVector& demand) {
  assert(!assigned(i) && InDomain(i, n));
  RestrictTo(i, n);
  assignment_[i] = n;
  residual_[n] -= demand;
  ++num_assigned_;
}

bool SearchNode::Remove(int i, int n) {
  uint8_t& cell = domain_[i * num_nodes_ + n];
  if (cell == 0) return false;
  cell = 0;
  --domain_size_[i];
  return true;
}

void SearchNode::RestrictTo(int i, int n) {
  for (int m = 0; m < num_nodes_; ++m) {
    if (m != n) Remove(i, m);
  }
}

// ---------------------------------------------------------------------------
// SearchSpace
// ---------------------------------------------------------------------------

SearchSpace::SearchSpace(const ProblemIndex& index)
    : index_(&index),
      neighbors_(index.num_instances()),
      separated_from_(index.num_instances()),
      colocation_class_(index.num_instances()),
      separated_(static_cast<size_t>(index.num_instances()) *
                     index.num_instances(),
                 0) {
  const int n = index.num_instances();
  for (const auto& e : index.edges()) {
    neighbors_[e.a].push_back({e.b, e.tolerance});
    neighbors_[e.b].push_back({e.a, e.tolerance});
  }
  for (const auto& s : index.separations()) {
    if (separated(s.a, s.b)) continue;
    separated_[s.a * n + s.b] = 1;
    separated_[s.b * n + s.a] = 1;
    separated_from_[s.a].push_back(s.b);
    separated_from_[s.b].push_back(s.a);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j != i && colocated(i, j)) colocation_class_[i].push_back(j);
    }
  }
}

SearchNode SearchSpace::Root() const {
  SearchNode root(index_->num_instances(), index_->num_nodes());
  for (int n = 0; n < index_->num_nodes(); ++n) {
    root.residual_[n] = index_->capacity(n);
  }
  return root;
}

bool SearchSpace::PairAllowed(const SearchNode& node, int a, int n, int b,
                              int m,
                              const std::optional<Micros>& tolerance) const {
  if (tolerance && index_->latency(n, m) > *tolerance) return false;
  if (n != m) return !colocated(a, b);
  if (separated(a, b)) return false;
  if (!node.assigned(a) && !node.assigned(b)) {
    return (index_->demand(a) + index_->demand(b))
        .FitsWithin(node.residual(n));
  }
  return true;
}

Micros SearchSpace::CheapestPartner(
    const SearchNode& node, int a, int n, int b,
    const std::optional<Micros>& tolerance) const {
  if (node.assigned(b)) {
    const int m = node.node_of(b);
    return PairAllowed(node, a, n, b, m, tolerance) ? index_->latency(n, m)
                                                    : kInfiniteBound;
  }
  Micros best = kInfiniteBound;
  for (int m = 0; m < index_->num_nodes(); ++m) {
    if (!node.InDomain(b, m)) continue;
    const Micros l = index_->latency(n, m);
    if (l < best && PairAllowed(node, a, n, b, m, tolerance)) best = l;
  }
  return best;
}

bool SearchSpace::Propagate(SearchNode& node) const {
  const int num_instances = index_->num_instances();
  const int num_nodes = index_->num_nodes();

  ResourceVector need;
  ResourceVector room;
  for (int i = 0; i < num_instances; ++i) {
    if (!node.assigned(i)) need += index_->demand(i);
  }
  for (int n = 0; n < num_nodes; ++n) {
    room.cpu += std::max<int64_t>(0, node.residual(n).cpu);
    room.memory += std::max<int64_t>(0, node.residual(n).memory);
  }
  if (!need.FitsWithin(room)) return false;

  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < num_instances; ++u) {
      if (node.assigned(u)) continue;
      // Unassigned members of u's colocation class all land on u's node.
      ResourceVector class_need = index_->demand(u);
      for (int v : colocation_class_[u]) {
        if (!node.assigned(v)) class_need += index_->demand(v);
      }
      for (int n = 0; n < num_nodes; ++n) {
        if (!node.InDomain(u, n)) continue;
        bool ok = class_need.FitsWithin(node.residual(n));
        for (size_t k = 0; ok && k < colocation_class_[u].size(); ++k) {
          ok = node.InDomain(colocation_class_[u][k], n);
        }
        for (size_t k = 0; ok && k < separated_from_[u].size(); ++k) {
          const int v = separated_from_[u][k];
          ok = !(node.domain_size(v) == 1 && node.InDomain(v, n));
        }
        for (size_t k = 0; ok && k < neighbors_[u].size(); ++k) {
          const Neighbor& nb = neighbors_[u][k];
          if (!nb.tolerance) continue;
          ok = CheapestPartner(node, u, n, nb.other, nb.tolerance) !=
               kInfiniteBound;
        }
        if (!ok) {
          node.Remove(u, n);
          changed = true;
        }
      }
      if (node.domain_size(u) == 0) return false;
    }
  }
  return true;
}

Micros SearchSpace::LowerBound(const SearchNode& node) const {
  Micros total = 0;
  for (const auto& e : index_->edges()) {
    Micros best = kInfiniteBound;
    for (int n = 0; n < index_->num_nodes(); ++n) {
      if (!node.InDomain(e.a, n)) continue;
      best = std::min(best, CheapestPartner(node, e.a, n, e.b, e.tolerance));
    }
    total = SaturatingAdd(total, best);
    if (total == kInfiniteBound) break;
  }
  return total;
}

Micros SearchSpace::InstanceBound(const SearchNode& node) const {
  // Works in doubled units so the even split stays integral.
  Micros doubled = 0;
  for (const auto& e : index_->edges()) {
    if (node.assigned(e.a) && node.assigned(e.b)) {
      doubled += 2 * index_->latency(node.node_of(e.a), node.node_of(e.b));
    }
  }
  for (int u = 0; u < index_->num_instances(); ++u) {
    if (node.assigned(u)) continue;
    Micros best = kInfiniteBound;
    for (int n = 0; n < index_->num_nodes(); ++n) {
      if (!node.InDomain(u, n)) continue;
      Micros cost = 0;
      for (const Neighbor& nb : neighbors_[u]) {
        Micros c = CheapestPartner(node, u, n, nb.other, nb.tolerance);
        if (c != kInfiniteBound && node.assigned(nb.other)) c *= 2;
        cost = SaturatingAdd(cost, c);
        if (cost >= best) break;
      }
      best = std::min(best, cost);
    }
    doubled = SaturatingAdd(doubled, best);
    if (doubled == kInfiniteBound) return kInfiniteBound;
  }
  return (doubled + 1) / 2;
}

Micros SearchSpace::Bound(const SearchNode& node) const {
  const Micros edge_bound = LowerBound(node);
  if (edge_bound == kInfiniteBound) return kInfiniteBound;
  return std::max(edge_bound, InstanceBound(node));
}

// ---------------------------------------------------------------------------
// Branch and bound
// ---------------------------------------------------------------------------

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const SearchSpace& space, const SolverConfig& config)
      : space_(space),
        index_(space.index()),
        config_(config),
        start_(std::chrono::steady_clock::now()) {
    degree_.resize(index_.num_instances());
    for (const auto& e : index_.edges()) {
      ++degree_[e.a];
      ++degree_[e.b];
    }
    for (const auto& s : index_.separations()) {
      ++degree_[s.a];
      ++degree_[s.b];
    }
  }

  void Run() {
    SearchNode root = space_.Root();
    ++nodes_explored_;
    if (!space_.Propagate(root)) return;
    if (root.complete()) {
      Record(root);
      return;
    }
    Search(root);
  }

  bool timed_out() const { return timed_out_; }
  uint64_t nodes_explored() const { return nodes_explored_; }
  const std::optional<std::vector<int>>& best() const { return best_; }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  struct Child {
    Micros bound;
    int node;
    SearchNode state;
  };

  bool OutOfTime() {
    if (timed_out_) return true;
    if (!config_.time_limit_seconds) return false;
    if ((nodes_explored_ & 0xff) == 0 &&
        elapsed() >= *config_.time_limit_seconds) {
      timed_out_ = true;
    }
    return timed_out_;
  }

  int SelectInstance(const SearchNode& node) const {
    int chosen = -1;
    for (int i = 0; i < index_.num_instances(); ++i) {
      if (node.assigned(i)) continue;
      if (config_.instance_order == InstanceOrder::kInputOrder) return i;
      if (chosen < 0 || node.domain_size(i) < node.domain_size(chosen) ||
          (node.domain_size(i) == node.domain_size(chosen) &&
           degree_[i] > degree_[chosen])) {
        chosen = i;
      }
    }
    return chosen;
  }

  // Whether some completion of `node` could be lexicographically smaller
  // than the incumbent, judged from the domains alone.
  bool MayBeLexSmaller(const SearchNode& node) const {
    const std::vector<int>& best = *best_;
    for (int i = 0; i < index_.num_instances(); ++i) {
      int lowest = 0;
      while (!node.InDomain(i, lowest)) ++lowest;
      if (lowest < best[i]) return true;
      if (!node.InDomain(i, best[i])) return false;
    }
    return false;
  }

  bool Prunable(const SearchNode& node, Micros bound) const {
    if (bound == kInfiniteBound) return true;
    if (!best_) return false;
    if (bound != best_objective_) return bound > best_objective_;
    return !MayBeLexSmaller(node);
  }

  void Record(const SearchNode& node) {
    assert(IsFeasible(index_, node.assignment()));
    const Micros objective = EvaluateObjective(index_, node.assignment());
    if (!best_ || objective < best_objective_ ||
        (objective == best_objective_ && node.assignment() < *best_)) {
      best_ = node.assignment();
      best_objective_ = objective;
    }
  }

  void Search(const SearchNode& node) {
    const int u = SelectInstance(node);
    std::vector<Child> children;
    for (int n = 0; n < index_.num_nodes(); ++n) {
      if (!node.InDomain(u, n)) continue;
      if (OutOfTime()) return;
      ++nodes_explored_;
      SearchNode child = node;
      child.Assign(u, n, index_.demand(u));
      if (!space_.Propagate(child)) continue;
      const Micros bound = space_.Bound(child);
      if (Prunable(child, bound)) continue;
      children.push_back({bound, n, std::move(child)});
    }
    if (config_.node_order == NodeOrder::kCheapestBoundFirst) {
      std::stable_sort(children.begin(), children.end(),
                       [](const Child& x, const Child& y) {
                         return x.bound < y.bound;
                       });
    }
    for (const Child& c : children) {
      if (OutOfTime()) return;
      if (Prunable(c.state, c.bound)) continue;
      if (c.state.complete()) {
        Record(c.state);
      } else {
        Search(c.state);
      }
    }
  }

  const SearchSpace& space_;
  const ProblemIndex& index_;
  SolverConfig config_;
  std::chrono::steady_clock::time_point start_;
  std::vector<int> degree_;
  std::optional<std::vector<int>> best_;
  Micros best_objective_ = 0;
  uint64_t nodes_explored_ = 0;
  bool timed_out_ = false;
};

}  // namespace

SolveReport Solve(const PlacementProblem& problem, const SolverConfig& config) {
  const ProblemIndex index(problem);
  return Solve(index, config);
}

SolveReport Solve(const ProblemIndex& index, const SolverConfig& config) {
  if (config.time_limit_seconds && !(*config.time_limit_seconds > 0.0)) {
    throw std::invalid_argument("time limit must be positive");
  }
  const SearchSpace space(index);
  BranchAndBound search(space, config);
  search.Run();
  const SolveStats stats{search.nodes_explored(), search.elapsed()};
  const SolveStatus status =
      search.timed_out()
          ? SolveStatus::kTimeLimit
          : (search.best() ? SolveStatus::kOptimal : SolveStatus::kInfeasible);
  if (!search.best()) return MakeEmptyReport("exact", status, stats);
  return MakeReport(index, "exact", status, *search.best(), stats);
}

}  // namespace vsfplace
