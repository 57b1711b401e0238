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

#ifndef VSFPLACE_GREEDY_H_
#define VSFPLACE_GREEDY_H_

#include "vsfplace/model.h"

namespace vsfplace {

// Latency- and policy-agnostic baseline: instances in input order, each on
// the first node (input order) with enough residual capacity. The report's
// status is kPlaced with whatever rule violations result, or kInfeasible if
// some instance fits nowhere.
SolveReport SolveGreedy(const PlacementProblem& problem);
SolveReport SolveGreedy(const ProblemIndex& index);

}  // namespace vsfplace

#endif  // VSFPLACE_GREEDY_H_
