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

// JSON reading and writing for problems, placements and solve reports.
//
// Problem schema:
//
//   {
//     "topology": {"nodes": [{"id": "n1", "cpu": 8, "mem": 8}, ...],
//                  "latency": [[0, 120, ...], ...]},
//     "instances": [{"id": "MME-1", "kind": "VNF", "function": "MME",
//                    "cpu": 2, "mem": 2}, ...],
//     "edges": [{"a": "FW-1", "b": "MME-1", "tolerance": 150},
//               {"a": "MME-1", "b": "SGW-1", "tolerance": null}, ...],
//     "policy": {"antiAffinity": [["IDS-1", "IDS-2"]],
//                "conflicts": [["a", "b"]],
//                "colocate": [["x", "y"]],
//                "proximity": [["FW-1", "MME-1"]]}
//   }
//
// "policy" and each of its members are optional on input. Placement schema:
// {"assignment": {"MME-1": "n3", ...}}; extra top-level keys are ignored, so
// a solve report is also a valid placement file.
//
// Writers emit keys in a fixed order with two-space indentation so output is
// byte-identical for identical input.

#ifndef VSFPLACE_PROBLEM_IO_H_
#define VSFPLACE_PROBLEM_IO_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "vsfplace/model.h"

namespace vsfplace {

using Json = nlohmann::ordered_json;

// Malformed JSON or a document that does not follow the schema.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

PlacementProblem ProblemFromJson(const Json& doc);
Json ProblemToJson(const PlacementProblem& problem);

Placement PlacementFromJson(const Json& doc);
// When `order` is given, instances are written in its input order; otherwise
// sorted by id.
Json PlacementToJson(const Placement& placement,
                     const PlacementProblem* order = nullptr);

// Machine-readable report. Wall time is left out so that reports for the same
// input are byte-identical.
Json ReportToJson(const SolveReport& report, const PlacementProblem& problem);

PlacementProblem ParseProblem(std::string_view text);
std::string SerializeProblem(const PlacementProblem& problem);
Placement ParsePlacement(std::string_view text);

// Serialized JSON followed by a newline.
std::string DumpJson(const Json& doc);

std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace vsfplace

#endif  // VSFPLACE_PROBLEM_IO_H_
