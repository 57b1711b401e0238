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

#include "vsfplace/report.h"

#include <string>

#include "gtest/gtest.h"
#include "test_problems.h"
#include "vsfplace/greedy.h"
#include "vsfplace/scenario.h"
#include "vsfplace/solver.h"

namespace vsfplace {
namespace {

using ::vsfplace::testing::MakeTopology;
using ::vsfplace::testing::Place;
using ::vsfplace::testing::Unit;

// Two published per-link rows (exact, greedy) used only as formatting input.
Comparison PublishedRows() {
  Comparison c;
  c.rows = {{"FW-1/MME-1", 399, 731}, {"DPI-1/PGW-1", 394, 706}};
  c.exact_total = 399 + 394;
  c.greedy_total = 731 + 706;
  return c;
}

TEST(ComparisonCsvTest, PublishedRows) {
  EXPECT_EQ(RenderComparisonCsv(PublishedRows()),
            "edge,exact_us,greedy_us\n"
            "FW-1/MME-1,399,731\n"
            "DPI-1/PGW-1,394,706\n"
            "total,793,1437\n");
}

TEST(ComparisonTableTest, PublishedRows) {
  EXPECT_EQ(RenderComparisonTable(PublishedRows()),
            "Function Instances  Exact (us)  Greedy (us)\n"
            "-------------------------------------------\n"
            "FW-1/MME-1                 399          731\n"
            "DPI-1/PGW-1                394          706\n"
            "-------------------------------------------\n"
            "Total                      793         1437\n"
            "greedy rule violations: 0\n");
}

TEST(ComparisonTest, MissingPlacementLeavesCellsEmpty) {
  Comparison c;
  c.rows = {{"a/b", 5, std::nullopt}};
  c.exact_total = 5;
  EXPECT_EQ(RenderComparisonCsv(c), "edge,exact_us,greedy_us\na/b,5,\ntotal,5,\n");
  const std::string table = RenderComparisonTable(c);
  EXPECT_NE(table.find("a/b                          5            -\n"),
            std::string::npos)
      << table;
  EXPECT_EQ(table.find("greedy rule violations"), std::string::npos);
}

TEST(ComparisonTest, OneEdgeBothCoLocate) {
  PlacementProblem p;
  p.topology = MakeTopology({{0, 10}, {10, 0}}, 4);
  p.instances = {Unit("a"), Unit("b")};
  p.edges = {{"a", "b", std::nullopt}};
  const Comparison c = BuildComparison(p, Solve(p, {}), SolveGreedy(p));
  ASSERT_EQ(c.rows.size(), 1u);
  EXPECT_EQ(c.rows[0], (ComparisonRow{"a/b", 0, 0}));
  EXPECT_EQ(c.exact_total, 0);
  EXPECT_EQ(c.greedy_total, 0);
  EXPECT_EQ(c.greedy_violations, 0u);
}

TEST(ComparisonTest, CountsGreedyViolations) {
  PlacementProblem p;
  p.topology = MakeTopology({{0, 10}, {10, 0}}, 4);
  p.instances = {Unit("a"), Unit("b")};
  p.edges = {{"a", "b", std::nullopt}};
  p.policy.conflict_pairs = {{"a", "b"}};
  const Comparison c = BuildComparison(p, Solve(p, {}), SolveGreedy(p));
  EXPECT_EQ(c.rows[0], (ComparisonRow{"a/b", 10, 0}));
  EXPECT_EQ(c.greedy_violations, 1u);
}

// Only the total is guaranteed to favour the exact solver; single links can
// be longer. Exact pays 20 on b-c to save 60 on a-b.
TEST(ComparisonTest, TotalsDominateButSingleRowsNeedNot) {
  PlacementProblem p;
  p.topology = MakeTopology({{0, 60, 70}, {60, 0, 20}, {70, 20, 0}}, 1);
  p.topology.nodes[1].capacity = {2, 2};
  p.instances = {Unit("a"), Unit("b"), Unit("c")};
  p.edges = {{"a", "b", std::nullopt}, {"b", "c", std::nullopt}};
  const SolveReport greedy = SolveGreedy(p);
  ASSERT_TRUE(greedy.violations.empty());
  EXPECT_EQ(*greedy.placement, Place({{"a", "n1"}, {"b", "n2"}, {"c", "n2"}}));
  const SolveReport exact = Solve(p, {});
  EXPECT_EQ(*exact.placement, Place({{"a", "n2"}, {"b", "n2"}, {"c", "n3"}}));
  const Comparison c = BuildComparison(p, exact, greedy);
  EXPECT_EQ(c.rows[0], (ComparisonRow{"a/b", 0, 60}));
  EXPECT_EQ(c.rows[1], (ComparisonRow{"b/c", 20, 0}));
  EXPECT_EQ(c.exact_total, 20);
  EXPECT_EQ(c.greedy_total, 60);
}

TEST(ComparisonTest, VepcTotalsDominateWhenGreedyIsFeasible) {
  int compared = 0;
  for (uint64_t seed = 1; compared < 10 && seed < 2000; ++seed) {
    ScenarioParams params;
    params.seed = seed;
    const PlacementProblem p = VepcProblem(params);
    const SolveReport greedy = SolveGreedy(p);
    if (!greedy.placement || !greedy.violations.empty()) continue;
    const Comparison c = BuildComparison(p, Solve(p, {}), greedy);
    ASSERT_TRUE(c.exact_total && c.greedy_total);
    EXPECT_LE(*c.exact_total, *c.greedy_total) << seed;
    Micros exact_sum = 0;
    Micros greedy_sum = 0;
    for (const auto& row : c.rows) {
      exact_sum += *row.exact;
      greedy_sum += *row.greedy;
    }
    EXPECT_EQ(exact_sum, *c.exact_total);
    EXPECT_EQ(greedy_sum, *c.greedy_total);
    ++compared;
  }
  EXPECT_EQ(compared, 10);
}

TEST(ReportRenderTest, CsvAndTable) {
  PlacementProblem p = testing::ChainProblem(1);
  const SolveReport r = Solve(p, {});
  EXPECT_EQ(RenderReportCsv(r), "edge,latency_us\na/b,10\nb/c,5\ntotal,15\n");
  const std::string table = RenderReportTable(r);
  EXPECT_NE(table.find("status:    optimal\n"), std::string::npos);
  EXPECT_NE(table.find("objective: 15 us\n"), std::string::npos);
  EXPECT_NE(table.find("feasible:  yes\n"), std::string::npos);
  EXPECT_NE(table.find("a/b             10\n"), std::string::npos) << table;
}

TEST(ReportRenderTest, NoPlacement) {
  const SolveReport r =
      MakeEmptyReport("exact", SolveStatus::kInfeasible, SolveStats{});
  EXPECT_EQ(RenderReportTable(r),
            "solver:    exact\nstatus:    infeasible\nplacement: none\n");
  EXPECT_EQ(RenderReportCsv(r), "edge,latency_us\n");
}

TEST(ReportRenderTest, ListsViolations) {
  PlacementProblem p;
  p.topology = MakeTopology({{0, 10}, {10, 0}}, 4);
  p.instances = {Unit("a"), Unit("b")};
  p.policy.conflict_pairs = {{"a", "b"}};
  const std::string table = RenderReportTable(SolveGreedy(p));
  EXPECT_NE(table.find("feasible:  no\n"), std::string::npos);
  EXPECT_NE(table.find("violations:\n  Conflict(a,b,n1)\n"), std::string::npos);
}

}  // namespace
}  // namespace vsfplace
