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

#include "vsfplace/problem_io.h"

#include <filesystem>
#include <string>

#include "gtest/gtest.h"
#include "test_problems.h"
#include "vsfplace/scenario.h"
#include "vsfplace/solver.h"

namespace vsfplace {
namespace {

using ::vsfplace::testing::ChainProblem;
using ::vsfplace::testing::Place;

constexpr char kTiny[] = R"({
  "topology": {"nodes": [{"id": "n1", "cpu": 4, "mem": 8},
                         {"id": "n2", "cpu": 2, "mem": 2}],
               "latency": [[0, 120], [120, 0]]},
  "instances": [{"id": "FW-1", "kind": "VSF", "function": "FW", "cpu": 1, "mem": 2},
                {"id": "MME-1", "kind": "VNF", "function": "MME", "cpu": 2, "mem": 1}],
  "edges": [{"a": "FW-1", "b": "MME-1", "tolerance": 150}],
  "policy": {"proximity": [["FW-1", "MME-1"]]}
})";

TEST(ProblemJsonTest, ReadsDocumentedSchema) {
  const PlacementProblem p = ParseProblem(kTiny);
  ASSERT_EQ(p.topology.nodes.size(), 2u);
  EXPECT_EQ(p.topology.nodes[0], (ServerNode{"n1", {4, 8}}));
  EXPECT_EQ(p.topology.latency[0][1], 120);
  ASSERT_EQ(p.instances.size(), 2u);
  EXPECT_EQ(p.instances[0],
            (InstanceSpec{"FW-1", InstanceKind::kVsf, "FW", {1, 2}}));
  ASSERT_EQ(p.edges.size(), 1u);
  EXPECT_EQ(p.edges[0], (InteractionEdge{"FW-1", "MME-1", 150}));
  EXPECT_EQ(p.policy.proximity_edges,
            (std::vector<InstancePair>{{"FW-1", "MME-1"}}));
  EXPECT_TRUE(p.policy.anti_affinity_groups.empty());
}

TEST(ProblemJsonTest, NullToleranceIsUnbounded) {
  const PlacementProblem p = ParseProblem(
      R"({"topology": {"nodes": [], "latency": []}, "instances": [],
          "edges": [{"a": "x", "b": "y", "tolerance": null},
                    {"a": "y", "b": "z"}]})");
  ASSERT_EQ(p.edges.size(), 2u);
  EXPECT_FALSE(p.edges[0].tolerance.has_value());
  EXPECT_FALSE(p.edges[1].tolerance.has_value());
}

TEST(ProblemJsonTest, SchemaErrors) {
  EXPECT_THROW(ParseProblem("{"), ParseError);
  EXPECT_THROW(ParseProblem("[]"), ParseError);
  EXPECT_THROW(ParseProblem(R"({"instances": [], "edges": []})"), ParseError);
  EXPECT_THROW(
      ParseProblem(R"({"topology": {"nodes": [{"id": "n1", "cpu": 1.5, "mem": 1}],
                                    "latency": [[0]]},
                       "instances": [], "edges": []})"),
      ParseError);
  EXPECT_THROW(
      ParseProblem(R"({"topology": {"nodes": [], "latency": []},
                       "instances": [{"id": "a", "kind": "PNF", "function": "F",
                                      "cpu": 1, "mem": 1}],
                       "edges": []})"),
      ParseError);
  EXPECT_THROW(
      ParseProblem(R"({"topology": {"nodes": [], "latency": []},
                       "instances": [], "edges": [],
                       "policy": {"conflicts": [["a", "b", "c"]]}})"),
      ParseError);
}

TEST(ProblemJsonTest, RoundTripIsLossless) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    ScenarioParams params;
    params.seed = seed;
    const PlacementProblem random = RandomProblem(params, 8, 0.5, 0.3);
    EXPECT_EQ(ParseProblem(SerializeProblem(random)), random);
    const PlacementProblem vepc = VepcProblem(params);
    EXPECT_EQ(ParseProblem(SerializeProblem(vepc)), vepc);
    EXPECT_EQ(SerializeProblem(ParseProblem(SerializeProblem(vepc))),
              SerializeProblem(vepc));
  }
}

TEST(ProblemJsonTest, WritesKeysInFixedOrder) {
  const std::string text = SerializeProblem(ParseProblem(kTiny));
  EXPECT_LT(text.find("\"topology\""), text.find("\"instances\""));
  EXPECT_LT(text.find("\"instances\""), text.find("\"edges\""));
  EXPECT_LT(text.find("\"edges\""), text.find("\"policy\""));
  EXPECT_NE(text.find("\"antiAffinity\": []"), std::string::npos);
  EXPECT_EQ(text.back(), '\n');
}

TEST(PlacementJsonTest, RoundTrip) {
  const Placement p = Place({{"a", "n1"}, {"b", "n3"}});
  EXPECT_EQ(ParsePlacement(DumpJson(PlacementToJson(p))), p);
  EXPECT_EQ(DumpJson(PlacementToJson(p)),
            "{\n  \"assignment\": {\n    \"a\": \"n1\",\n    \"b\": \"n3\"\n"
            "  }\n}\n");
}

TEST(PlacementJsonTest, FollowsProblemOrder) {
  PlacementProblem problem = ChainProblem(1);
  problem.instances = {testing::Unit("c"), testing::Unit("a"),
                       testing::Unit("b")};
  const Placement p = Place({{"a", "n1"}, {"b", "n2"}, {"c", "n3"}});
  const std::string text = DumpJson(PlacementToJson(p, &problem));
  EXPECT_LT(text.find("\"c\""), text.find("\"a\""));
  EXPECT_LT(text.find("\"a\""), text.find("\"b\""));
}

TEST(PlacementJsonTest, Errors) {
  EXPECT_THROW(ParsePlacement("{}"), ParseError);
  EXPECT_THROW(ParsePlacement(R"({"assignment": []})"), ParseError);
  EXPECT_THROW(ParsePlacement(R"({"assignment": {"a": 3}})"), ParseError);
}

TEST(ReportJsonTest, FieldsAndPlacementReadBack) {
  PlacementProblem p = ChainProblem(1);
  p.policy.anti_affinity_groups = {{"a", "c"}};
  const SolveReport report = Solve(p, {});
  const Json doc = ReportToJson(report, p);
  EXPECT_EQ(doc["solver"], "exact");
  EXPECT_EQ(doc["status"], "optimal");
  EXPECT_EQ(doc["feasible"], true);
  EXPECT_EQ(doc["objective_us"], 15);
  EXPECT_EQ(doc["edge_latencies"].size(), 2u);
  EXPECT_EQ(doc["edge_latencies"][0]["latency_us"], 10);
  EXPECT_TRUE(doc["violations"].empty());
  EXPECT_FALSE(doc.contains("wall_seconds"));
  EXPECT_FALSE(doc["stats"].contains("wall_seconds"));
  // A report doubles as a placement file.
  EXPECT_EQ(ParsePlacement(DumpJson(doc)), *report.placement);
}

TEST(ReportJsonTest, InfeasibleReport) {
  PlacementProblem p = ChainProblem(1);
  p.policy.anti_affinity_groups = {{"a", "b"}};
  p.policy.colocation_groups = {{"b", "c"}};
  const SolveReport report = Solve(p, {});
  ASSERT_EQ(report.status, SolveStatus::kInfeasible);
  const Json doc = ReportToJson(report, p);
  EXPECT_EQ(doc["status"], "infeasible");
  EXPECT_EQ(doc["feasible"], false);
  EXPECT_TRUE(doc["objective_us"].is_null());
  EXPECT_TRUE(doc["assignment"].is_null());
}

TEST(TextFileTest, WriteThenRead) {
  const auto path =
      std::filesystem::temp_directory_path() / "vsfplace_io_test.txt";
  WriteTextFile(path, "abc\n");
  EXPECT_EQ(ReadTextFile(path), "abc\n");
  std::filesystem::remove(path);
  EXPECT_THROW(ReadTextFile(path), std::runtime_error);
}

}  // namespace
}  // namespace vsfplace
