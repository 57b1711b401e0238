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

// MILP encodings of a placement problem, for use with external solvers.
//
// Variable naming (indices are input-order positions, edges normalised so
// that i < j):
//
//   D_i_n      binary, 1 iff instance i is hosted on node n
//   L_i_j      integer >= 0, latency of the edge between i and j
//   Y_i_j_n_m  binary, tolerance indicator for edge (i,j) and node pair
//              (n,m); faithful mode only
//   Z_i_j_n_m  binary, D_i_n * D_j_m; corrected mode only
//
// Faithful mode transcribes the published big-M model row for row, including
// the never-binding "D + D <= 2" collaboration rows and the one-sided latency
// linking rows. Corrected mode replaces the linking rows with an exact
// product linearisation through Z and turns colocation into equalities, so
// that its optimum is the true minimum-latency placement.
//
// Row names start with the equation group they instantiate: eq6, eq7, eq8
// (latency linking and tolerance), eq9 (anti-affinity), eq10 (conflict),
// eq11 (colocation), eq12 (one node per instance), eq13 (capacity); the
// corrected linearisation uses zlo, zup1, zup2 and lat. Rows are ordered by
// group, then lexicographically by indices.

#ifndef VSFPLACE_MILP_EXPORT_H_
#define VSFPLACE_MILP_EXPORT_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vsfplace/model.h"

namespace vsfplace {

enum class VariableKind { kBinary, kInteger };

struct MilpVariable {
  std::string name;
  VariableKind kind = VariableKind::kBinary;
  // Only meaningful for integer variables.
  int64_t lower = 0;
  std::optional<int64_t> upper;

  friend bool operator==(const MilpVariable&, const MilpVariable&) = default;
};

struct MilpTerm {
  int64_t coefficient;
  int variable;  // index into MilpEncoding::variables

  friend bool operator==(const MilpTerm&, const MilpTerm&) = default;
};

enum class RowSense { kLessEqual, kGreaterEqual, kEqual };

struct MilpRow {
  std::string name;
  std::vector<MilpTerm> terms;
  RowSense sense = RowSense::kLessEqual;
  int64_t rhs = 0;

  friend bool operator==(const MilpRow&, const MilpRow&) = default;
};

struct MilpEncoding {
  // Binary variables first, then integer ones.
  std::vector<MilpVariable> variables;
  std::vector<MilpRow> rows;
  std::vector<MilpTerm> objective;  // minimised
  int64_t big_m = 0;
  // Free-text header lines (index legend); carried through the LP file.
  std::vector<std::string> comments;

  friend bool operator==(const MilpEncoding&, const MilpEncoding&) = default;

  // -1 if absent.
  int FindVariable(std::string_view name) const;
  // Number of variables whose name starts with `prefix` (e.g. "D_").
  int CountVariables(std::string_view prefix) const;
  // Number of rows whose name starts with `prefix` followed by '_'.
  int CountRows(std::string_view group) const;
};

enum class EncodingMode { kPaperFaithful, kCorrected };

const char* EncodingModeName(EncodingMode mode);
std::optional<EncodingMode> ParseEncodingMode(std::string_view name);

// 1 + the largest latency entry.
int64_t DefaultBigM(const ProblemIndex& index);

// Both throw InvalidProblemError for invalid problems and
// std::invalid_argument when `big_m` does not exceed every latency entry.
MilpEncoding EncodePaperFaithful(const PlacementProblem& problem,
                                 std::optional<int64_t> big_m = std::nullopt);
MilpEncoding EncodeCorrected(const PlacementProblem& problem,
                             std::optional<int64_t> big_m = std::nullopt);
MilpEncoding Encode(const PlacementProblem& problem, EncodingMode mode,
                    std::optional<int64_t> big_m = std::nullopt);

// The 0/1 and latency vector a concrete placement induces: D from the
// assignment, L from the hosting-node latencies, Z = D_i_n * D_j_m and
// Y = [L <= tolerance].
std::vector<int64_t> InducedSolution(const MilpEncoding& encoding,
                                     const ProblemIndex& index,
                                     std::span<const int> assignment);

bool RowSatisfied(const MilpRow& row, std::span<const int64_t> values);
// Indices of rows that `values` violates.
std::vector<int> ViolatedRows(const MilpEncoding& encoding,
                              std::span<const int64_t> values);
int64_t ObjectiveValue(const MilpEncoding& encoding,
                       std::span<const int64_t> values);

// ---------------------------------------------------------------------------
// CPLEX LP format
// ---------------------------------------------------------------------------

class LpParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sections Minimize / Subject To / Bounds / Binary / General / End, preceded
// by backslash comment lines carrying big-M and the encoding comments.
// Output depends only on the encoding.
void WriteLp(const MilpEncoding& encoding, std::ostream& out);
std::string ToLpString(const MilpEncoding& encoding);

// Reads the subset WriteLp produces back into an encoding equal to the one
// written.
MilpEncoding ParseLp(std::string_view text);

}  // namespace vsfplace

#endif  // VSFPLACE_MILP_EXPORT_H_
