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

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "test_problems.h"
#include "vsfplace/scenario.h"
#include "vsfplace/solver.h"

namespace vsfplace {
namespace {

using ::vsfplace::testing::ChainProblem;
using ::vsfplace::testing::MakeTopology;
using ::vsfplace::testing::Place;
using ::vsfplace::testing::Unit;

TEST(SolveGreedyTest, FirstFitPacks) {
  PlacementProblem p;
  p.topology = MakeTopology({{0, 50}, {50, 0}}, 2);
  p.instances = {Unit("a"), Unit("b")};
  p.edges = {{"a", "b", std::nullopt}};
  const SolveReport r = SolveGreedy(p);
  EXPECT_EQ(r.status, SolveStatus::kPlaced);
  EXPECT_EQ(*r.placement, Place({{"a", "n1"}, {"b", "n1"}}));
  EXPECT_EQ(r.objective, 0);
  EXPECT_EQ(r.solver, "greedy");
}

TEST(SolveGreedyTest, IgnoresSecurityRules) {
  PlacementProblem p;
  p.topology = MakeTopology({{0, 50}, {50, 0}}, 10);
  p.instances = {Unit("x"), Unit("y")};
  p.policy.anti_affinity_groups = {{"x", "y"}};
  const SolveReport r = SolveGreedy(p);
  EXPECT_EQ(r.status, SolveStatus::kPlaced);
  EXPECT_EQ(*r.placement, Place({{"x", "n1"}, {"y", "n1"}}));
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].ToString(), "AntiAffinity(x,y,n1)");
}

TEST(SolveGreedyTest, ChainOnUnitCapacities) {
  const PlacementProblem p = ChainProblem(1);
  const SolveReport r = SolveGreedy(p);
  EXPECT_EQ(*r.placement, Place({{"a", "n1"}, {"b", "n2"}, {"c", "n3"}}));
  // Hand trace: a fills n1, b fills n2, c lands on n3; 10 + 5.
  EXPECT_EQ(r.objective, 15);
  EXPECT_EQ(r.objective, EvaluateObjective(p, *r.placement));
  EXPECT_LE(Solve(p, {}).objective, r.objective);
}

TEST(SolveGreedyTest, FeasibleButWorseThanExact) {
  // n1 only fits one instance, so first fit splits the pair across the link.
  PlacementProblem p;
  p.topology = MakeTopology({{0, 40}, {40, 0}}, 2);
  p.topology.nodes[0].capacity = {1, 1};
  p.instances = {Unit("a"), Unit("b")};
  p.edges = {{"a", "b", std::nullopt}};
  const SolveReport g = SolveGreedy(p);
  EXPECT_EQ(*g.placement, Place({{"a", "n1"}, {"b", "n2"}}));
  EXPECT_TRUE(g.violations.empty());
  EXPECT_EQ(g.objective, 40);
  const SolveReport e = Solve(p, {});
  EXPECT_EQ(*e.placement, Place({{"a", "n2"}, {"b", "n2"}}));
  EXPECT_EQ(e.objective, 0);
}

TEST(SolveGreedyTest, InfeasibleWhenSomethingFitsNowhere) {
  PlacementProblem p = ChainProblem(1);
  p.instances[2].demand = {2, 1};
  const SolveReport r = SolveGreedy(p);
  EXPECT_EQ(r.status, SolveStatus::kInfeasible);
  EXPECT_FALSE(r.placement.has_value());
}

TEST(SolveGreedyTest, NeverExceedsCapacity) {
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    ScenarioParams params;
    params.seed = seed;
    const PlacementProblem p = VepcProblem(params);
    const SolveReport r = SolveGreedy(p);
    if (!r.placement) continue;
    for (const auto& v : r.violations) {
      EXPECT_NE(v.kind, ViolationKind::kCapacityExceeded) << seed;
    }
  }
}

TEST(SolveGreedyTest, FeasibleGreedyNeverBeatsExact) {
  int compared = 0;
  for (uint64_t seed = 1; seed <= 150; ++seed) {
    const PlacementProblem p = testing::SmallRandomProblem(seed);
    const SolveReport g = SolveGreedy(p);
    if (!g.placement || !g.violations.empty()) continue;
    const SolveReport e = Solve(p, {});
    ASSERT_EQ(e.status, SolveStatus::kOptimal);
    EXPECT_LE(e.objective, g.objective) << seed;
    ++compared;
  }
  EXPECT_GE(compared, 20);
}

TEST(SolveGreedyTest, Deterministic) {
  ScenarioParams params;
  params.seed = 3;
  const PlacementProblem p = VepcProblem(params);
  const SolveReport a = SolveGreedy(p);
  const SolveReport b = SolveGreedy(p);
  EXPECT_EQ(a.placement, b.placement);
  EXPECT_EQ(a.violations, b.violations);
  EXPECT_EQ(a.stats.nodes_explored, b.stats.nodes_explored);
}

}  // namespace
}  // namespace vsfplace
