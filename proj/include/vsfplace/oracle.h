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

// Brute-force reference optimizer. Walks every one of the |N|^|I|
// assignments with no pruning at all and keeps the cheapest feasible one,
// breaking ties towards the lexicographically smallest node-index vector.

#ifndef VSFPLACE_ORACLE_H_
#define VSFPLACE_ORACLE_H_

#include <cstdint>
#include <stdexcept>

#include "vsfplace/model.h"

namespace vsfplace {

inline constexpr uint64_t kDefaultEnumerationLimit = 10'000'000;

// Thrown when |N|^|I| exceeds the caller's limit.
class EnumerationLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

SolveReport EnumerateOptimal(const PlacementProblem& problem,
                             uint64_t limit = kDefaultEnumerationLimit);
SolveReport EnumerateOptimal(const ProblemIndex& index,
                             uint64_t limit = kDefaultEnumerationLimit);

// |N|^|I|, saturating at UINT64_MAX.
uint64_t AssignmentCount(int num_nodes, int num_instances);

}  // namespace vsfplace

#endif  // VSFPLACE_ORACLE_H_
