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

#include "vsfplace/oracle.h"

#include <chrono>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace vsfplace {

uint64_t AssignmentCount(int num_nodes, int num_instances) {
  uint64_t count = 1;
  for (int i = 0; i < num_instances; ++i) {
    if (num_nodes != 0 &&
        count > std::numeric_limits<uint64_t>::max() / num_nodes) {
      return std::numeric_limits<uint64_t>::max();
    }
    count *= static_cast<uint64_t>(num_nodes);
  }
  return count;
}

SolveReport EnumerateOptimal(const PlacementProblem& problem, uint64_t limit) {
  const ProblemIndex index(problem);
  return EnumerateOptimal(index, limit);
}

SolveReport EnumerateOptimal(const ProblemIndex& index, uint64_t limit) {
  const auto start = std::chrono::steady_clock::now();
  const int num_instances = index.num_instances();
  const int num_nodes = index.num_nodes();
  const uint64_t total = AssignmentCount(num_nodes, num_instances);
  if (total > limit) {
    throw EnumerationLimitError(
        "oracle refuses to enumerate " + std::to_string(num_nodes) + "^" +
        std::to_string(num_instances) + " assignments (limit " +
        std::to_string(limit) + ")");
  }

  std::optional<std::vector<int>> best;
  Micros best_objective = 0;
  // Odometer with instance 0 as the most significant digit, so assignments
  // come out in lexicographic order and the first optimum seen wins ties.
  std::vector<int> assignment(num_instances, 0);
  for (uint64_t step = 0; step < total; ++step) {
    if (IsFeasible(index, assignment)) {
      const Micros objective = EvaluateObjective(index, assignment);
      if (!best || objective < best_objective) {
        best = assignment;
        best_objective = objective;
      }
    }
    for (int i = num_instances - 1; i >= 0; --i) {
      if (++assignment[i] < num_nodes) break;
      assignment[i] = 0;
    }
  }

  const SolveStats stats{
      total, std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                           start)
                 .count()};
  if (!best) return MakeEmptyReport("oracle", SolveStatus::kInfeasible, stats);
  return MakeReport(index, "oracle", SolveStatus::kOptimal, *best, stats);
}

}  // namespace vsfplace
