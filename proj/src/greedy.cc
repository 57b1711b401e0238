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

#include "vsfplace/greedy.h"

#include <vector>

namespace vsfplace {

SolveReport SolveGreedy(const PlacementProblem& problem) {
  const ProblemIndex index(problem);
  return SolveGreedy(index);
}

SolveReport SolveGreedy(const ProblemIndex& index) {
  std::vector<ResourceVector> residual;
  for (int n = 0; n < index.num_nodes(); ++n) {
    residual.push_back(index.capacity(n));
  }
  std::vector<int> assignment(index.num_instances(), -1);
  uint64_t probes = 0;
  for (int i = 0; i < index.num_instances(); ++i) {
    for (int n = 0; n < index.num_nodes(); ++n) {
      ++probes;
      if (index.demand(i).FitsWithin(residual[n])) {
        assignment[i] = n;
        residual[n] -= index.demand(i);
        break;
      }
    }
    if (assignment[i] < 0) {
      return MakeEmptyReport("greedy", SolveStatus::kInfeasible, {probes, 0.0});
    }
  }
  return MakeReport(index, "greedy", SolveStatus::kPlaced, assignment,
                    {probes, 0.0});
}

}  // namespace vsfplace
