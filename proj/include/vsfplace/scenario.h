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

// Seeded problem generators: the vEPC use case (13 instances: MME x2,
// HSS x1, SGW x2, PGW x2, FW x2, DPI x2, IDS x2) and random problems for
// property tests. Output is a pure function of the parameters; random draws
// come from std::mt19937_64 through library-independent range reduction, so
// files are identical across standard library implementations.

#ifndef VSFPLACE_SCENARIO_H_
#define VSFPLACE_SCENARIO_H_

#include <cstdint>
#include <random>

#include "vsfplace/model.h"

namespace vsfplace {

struct IntRange {
  int64_t min = 0;
  int64_t max = 0;
};

struct ScenarioParams {
  uint64_t seed = 1;
  int node_count = 10;
  // Inter-node latency, microseconds.
  IntRange latency{100, 1000};
  // Per-node capacity and per-instance demand; each range applies to cpu and
  // memory independently.
  IntRange capacity{8, 16};
  IntRange demand{1, 4};
};

// Throws std::invalid_argument on node_count < 1, an inverted range or a
// negative lower bound.
void ValidateParams(const ScenarioParams& params);

// Uniform integer in [lo, hi].
int64_t UniformInt(std::mt19937_64& rng, int64_t lo, int64_t hi);
// Uniform double in [0, 1).
double UniformUnit(std::mt19937_64& rng);

// Nodes "n1".."nN" with symmetric zero-diagonal latencies.
Topology RandomTopology(const ScenarioParams& params, std::mt19937_64& rng);

// Smallest latency between two distinct nodes (0 for a single node).
Micros MinDistinctLatency(const Topology& topology);

// The vEPC chain with firewall proximity edges, IDS active-active pair and
// redundant DPI pair. Requires node_count >= 2.
PlacementProblem VepcProblem(const ScenarioParams& params);

// Each instance pair gets an edge with probability `edge_density` and a
// policy rule (anti-affinity, conflict or colocation, chosen uniformly) with
// probability `rule_density`. Colocation classes and separations are kept
// disjoint, and no separation group exceeds the node count.
PlacementProblem RandomProblem(const ScenarioParams& params,
                               int instance_count, double edge_density,
                               double rule_density);

}  // namespace vsfplace

#endif  // VSFPLACE_SCENARIO_H_
