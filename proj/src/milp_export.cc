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

#include "vsfplace/milp_export.h"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace vsfplace {
namespace {

std::string Name(std::string_view prefix, std::initializer_list<int> indices) {
  std::string out(prefix);
  for (int k : indices) {
    out += '_';
    out += std::to_string(k);
  }
  return out;
}

// Sorted, de-duplicated (min, max) index pairs.
using PairSet = std::set<std::pair<int, int>>;

void AddPair(PairSet& pairs, int a, int b) {
  pairs.insert({std::min(a, b), std::max(a, b)});
}

// Builds the rows and variables shared by both modes and the mode-specific
// latency linking.
class Encoder {
 public:
  Encoder(const PlacementProblem& problem, EncodingMode mode,
          std::optional<int64_t> big_m)
      : index_(problem), mode_(mode) {
    big_m_ = big_m.value_or(DefaultBigM(index_));
    if (big_m_ <= index_.max_latency()) {
      throw std::invalid_argument("big-M must exceed every latency entry (" +
                                  std::to_string(index_.max_latency()) + ")");
    }
    for (const auto& e : index_.edges()) {
      edges_.push_back({std::min(e.a, e.b), std::max(e.a, e.b), e.tolerance});
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const ProblemIndex::Edge& x, const ProblemIndex::Edge& y) {
                return std::tie(x.a, x.b) < std::tie(y.a, y.b);
              });
  }

  MilpEncoding Build() {
    const int num_i = index_.num_instances();
    const int num_n = index_.num_nodes();
    enc_.big_m = big_m_;
    enc_.comments.push_back(std::string("mode: ") + EncodingModeName(mode_));
    for (int i = 0; i < num_i; ++i) {
      enc_.comments.push_back("instance " + std::to_string(i) + ": " +
                              index_.problem().instances[i].id);
    }
    for (int n = 0; n < num_n; ++n) {
      enc_.comments.push_back("node " + std::to_string(n) + ": " +
                              index_.problem().topology.nodes[n].id);
    }

    // Binary variables first, integer variables last.
    for (int i = 0; i < num_i; ++i) {
      for (int n = 0; n < num_n; ++n) AddVariable(Name("D", {i, n}), VariableKind::kBinary);
    }
    const char* pair_prefix = mode_ == EncodingMode::kPaperFaithful ? "Y" : "Z";
    for (const auto& e : edges_) {
      for (int n = 0; n < num_n; ++n) {
        for (int m = 0; m < num_n; ++m) {
          AddVariable(Name(pair_prefix, {e.a, e.b, n, m}), VariableKind::kBinary);
        }
      }
    }
    for (const auto& e : edges_) {
      MilpVariable& l = AddVariable(Name("L", {e.a, e.b}), VariableKind::kInteger);
      if (mode_ == EncodingMode::kCorrected) l.upper = big_m_;
      enc_.objective.push_back({1, Var(Name("L", {e.a, e.b}))});
    }

    if (mode_ == EncodingMode::kPaperFaithful) {
      FaithfulLinking();
    } else {
      ProductLinking();
    }
    ToleranceRows();
    SeparationRows();
    ColocationRows();
    UniquenessRows();
    CapacityRows();
    return std::move(enc_);
  }

 private:
  MilpVariable& AddVariable(std::string name, VariableKind kind) {
    var_index_.emplace(name, static_cast<int>(enc_.variables.size()));
    enc_.variables.push_back({std::move(name), kind, 0, std::nullopt});
    return enc_.variables.back();
  }

  int Var(const std::string& name) const { return var_index_.at(name); }
  int D(int i, int n) const { return Var(Name("D", {i, n})); }

  void AddRow(std::string name, std::vector<MilpTerm> terms, RowSense sense,
              int64_t rhs) {
    if (terms.empty()) return;
    enc_.rows.push_back({std::move(name), std::move(terms), sense, rhs});
  }

  // (L^Server_nm - L_ij) <= M * Y_ijnm  and  (D_in - D_jm) <= M * (1 - Y_ijnm).
  void FaithfulLinking() {
    const int num_n = index_.num_nodes();
    for (const auto& e : edges_) {
      const int l = Var(Name("L", {e.a, e.b}));
      for (int n = 0; n < num_n; ++n) {
        for (int m = 0; m < num_n; ++m) {
          const int y = Var(Name("Y", {e.a, e.b, n, m}));
          AddRow(Name("eq6", {e.a, e.b, n, m}), {{-1, l}, {-big_m_, y}},
                 RowSense::kLessEqual, -index_.latency(n, m));
        }
      }
    }
    for (const auto& e : edges_) {
      for (int n = 0; n < num_n; ++n) {
        for (int m = 0; m < num_n; ++m) {
          const int y = Var(Name("Y", {e.a, e.b, n, m}));
          AddRow(Name("eq7", {e.a, e.b, n, m}),
                 {{1, D(e.a, n)}, {-1, D(e.b, m)}, {big_m_, y}},
                 RowSense::kLessEqual, big_m_);
        }
      }
    }
  }

  // Z_ijnm = D_in * D_jm and L_ij = sum L^Server_nm * Z_ijnm.
  void ProductLinking() {
    const int num_n = index_.num_nodes();
    for (const auto& e : edges_) {
      for (int n = 0; n < num_n; ++n) {
        for (int m = 0; m < num_n; ++m) {
          const int z = Var(Name("Z", {e.a, e.b, n, m}));
          AddRow(Name("zlo", {e.a, e.b, n, m}),
                 {{1, z}, {-1, D(e.a, n)}, {-1, D(e.b, m)}},
                 RowSense::kGreaterEqual, -1);
          AddRow(Name("zup1", {e.a, e.b, n, m}), {{1, z}, {-1, D(e.a, n)}},
                 RowSense::kLessEqual, 0);
          AddRow(Name("zup2", {e.a, e.b, n, m}), {{1, z}, {-1, D(e.b, m)}},
                 RowSense::kLessEqual, 0);
        }
      }
    }
    for (const auto& e : edges_) {
      std::vector<MilpTerm> terms = {{1, Var(Name("L", {e.a, e.b}))}};
      for (int n = 0; n < num_n; ++n) {
        for (int m = 0; m < num_n; ++m) {
          const Micros l = index_.latency(n, m);
          if (l != 0) terms.push_back({-l, Var(Name("Z", {e.a, e.b, n, m}))});
        }
      }
      AddRow(Name("lat", {e.a, e.b}), std::move(terms), RowSense::kEqual, 0);
    }
  }

  void ToleranceRows() {
    for (const auto& e : edges_) {
      if (!e.tolerance) continue;
      AddRow(Name("eq8", {e.a, e.b}), {{1, Var(Name("L", {e.a, e.b}))}},
             RowSense::kLessEqual, *e.tolerance);
    }
  }

  void SeparationRows() {
    PairSet anti;
    PairSet conflict;
    for (const auto& s : index_.separations()) {
      AddPair(s.conflict ? conflict : anti, s.a, s.b);
    }
    for (const auto& [group, pairs] :
         {std::pair{"eq9", &anti}, std::pair{"eq10", &conflict}}) {
      for (const auto& [a, b] : *pairs) {
        for (int n = 0; n < index_.num_nodes(); ++n) {
          AddRow(Name(group, {a, b, n}), {{1, D(a, n)}, {1, D(b, n)}},
                 RowSense::kLessEqual, 1);
        }
      }
    }
  }

  void ColocationRows() {
    PairSet pairs;
    for (const auto& group : index_.colocation_groups()) {
      for (size_t x = 0; x < group.size(); ++x) {
        for (size_t y = x + 1; y < group.size(); ++y) {
          // Faithful mode instantiates every member pair; the strict
          // equalities only need the first member against the rest.
          if (mode_ == EncodingMode::kPaperFaithful || x == 0) {
            AddPair(pairs, group[x], group[y]);
          }
        }
      }
    }
    for (const auto& [a, b] : pairs) {
      for (int n = 0; n < index_.num_nodes(); ++n) {
        if (mode_ == EncodingMode::kPaperFaithful) {
          AddRow(Name("eq11", {a, b, n}), {{1, D(a, n)}, {1, D(b, n)}},
                 RowSense::kLessEqual, 2);
        } else {
          AddRow(Name("eq11", {a, b, n}), {{1, D(a, n)}, {-1, D(b, n)}},
                 RowSense::kEqual, 0);
        }
      }
    }
  }

  void UniquenessRows() {
    for (int i = 0; i < index_.num_instances(); ++i) {
      std::vector<MilpTerm> terms;
      for (int n = 0; n < index_.num_nodes(); ++n) terms.push_back({1, D(i, n)});
      AddRow(Name("eq12", {i}), std::move(terms), RowSense::kEqual, 1);
    }
  }

  void CapacityRows() {
    for (int n = 0; n < index_.num_nodes(); ++n) {
      std::vector<MilpTerm> cpu;
      std::vector<MilpTerm> mem;
      for (int i = 0; i < index_.num_instances(); ++i) {
        cpu.push_back({index_.demand(i).cpu, D(i, n)});
        mem.push_back({index_.demand(i).memory, D(i, n)});
      }
      AddRow(Name("eq13", {n}) + "_cpu", std::move(cpu), RowSense::kLessEqual,
             index_.capacity(n).cpu);
      AddRow(Name("eq13", {n}) + "_mem", std::move(mem), RowSense::kLessEqual,
             index_.capacity(n).memory);
    }
  }

  ProblemIndex index_;
  EncodingMode mode_;
  int64_t big_m_ = 0;
  std::vector<ProblemIndex::Edge> edges_;
  MilpEncoding enc_;
  std::unordered_map<std::string, int> var_index_;
};

// Splits "P_1_2_3" into its numeric suffixes.
std::vector<int> NameIndices(std::string_view name) {
  std::vector<int> out;
  size_t pos = name.find('_');
  while (pos != std::string_view::npos) {
    const size_t next = name.find('_', pos + 1);
    const std::string_view part = name.substr(
        pos + 1, next == std::string_view::npos ? next : next - pos - 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size()) return {};
    out.push_back(value);
    pos = next;
  }
  return out;
}

}  // namespace

int MilpEncoding::FindVariable(std::string_view name) const {
  for (size_t v = 0; v < variables.size(); ++v) {
    if (variables[v].name == name) return static_cast<int>(v);
  }
  return -1;
}

int MilpEncoding::CountVariables(std::string_view prefix) const {
  return static_cast<int>(
      std::count_if(variables.begin(), variables.end(),
                    [&](const MilpVariable& v) { return v.name.starts_with(prefix); }));
}

int MilpEncoding::CountRows(std::string_view group) const {
  const std::string prefix = std::string(group) + "_";
  return static_cast<int>(std::count_if(
      rows.begin(), rows.end(),
      [&](const MilpRow& r) { return r.name.starts_with(prefix); }));
}

const char* EncodingModeName(EncodingMode mode) {
  return mode == EncodingMode::kPaperFaithful ? "faithful" : "corrected";
}

std::optional<EncodingMode> ParseEncodingMode(std::string_view name) {
  if (name == "faithful") return EncodingMode::kPaperFaithful;
  if (name == "corrected") return EncodingMode::kCorrected;
  return std::nullopt;
}

int64_t DefaultBigM(const ProblemIndex& index) {
  return 1 + index.max_latency();
}

MilpEncoding EncodePaperFaithful(const PlacementProblem& problem,
                                 std::optional<int64_t> big_m) {
  return Encoder(problem, EncodingMode::kPaperFaithful, big_m).Build();
}

MilpEncoding EncodeCorrected(const PlacementProblem& problem,
                             std::optional<int64_t> big_m) {
  return Encoder(problem, EncodingMode::kCorrected, big_m).Build();
}

MilpEncoding Encode(const PlacementProblem& problem, EncodingMode mode,
                    std::optional<int64_t> big_m) {
  return Encoder(problem, mode, big_m).Build();
}

std::vector<int64_t> InducedSolution(const MilpEncoding& encoding,
                                     const ProblemIndex& index,
                                     std::span<const int> assignment) {
  std::unordered_map<int64_t, std::optional<Micros>> tolerance;
  const auto key = [&](int a, int b) {
    return static_cast<int64_t>(std::min(a, b)) * index.num_instances() +
           std::max(a, b);
  };
  for (const auto& e : index.edges()) tolerance[key(e.a, e.b)] = e.tolerance;

  std::vector<int64_t> values(encoding.variables.size(), 0);
  for (size_t v = 0; v < encoding.variables.size(); ++v) {
    const std::string& name = encoding.variables[v].name;
    const std::vector<int> idx = NameIndices(name);
    switch (name.front()) {
      case 'D':
        values[v] = assignment[idx.at(0)] == idx.at(1) ? 1 : 0;
        break;
      case 'L':
        values[v] = index.latency(assignment[idx.at(0)], assignment[idx.at(1)]);
        break;
      case 'Z':
        values[v] = assignment[idx.at(0)] == idx.at(2) &&
                            assignment[idx.at(1)] == idx.at(3)
                        ? 1
                        : 0;
        break;
      case 'Y': {
        const auto& tol = tolerance.at(key(idx.at(0), idx.at(1)));
        const Micros l =
            index.latency(assignment[idx.at(0)], assignment[idx.at(1)]);
        values[v] = !tol || l <= *tol ? 1 : 0;
        break;
      }
      default:
        throw std::invalid_argument("unknown variable family in '" + name + "'");
    }
  }
  return values;
}

bool RowSatisfied(const MilpRow& row, std::span<const int64_t> values) {
  int64_t lhs = 0;
  for (const auto& t : row.terms) lhs += t.coefficient * values[t.variable];
  switch (row.sense) {
    case RowSense::kLessEqual: return lhs <= row.rhs;
    case RowSense::kGreaterEqual: return lhs >= row.rhs;
    case RowSense::kEqual: return lhs == row.rhs;
  }
  return false;
}

std::vector<int> ViolatedRows(const MilpEncoding& encoding,
                              std::span<const int64_t> values) {
  std::vector<int> out;
  for (size_t r = 0; r < encoding.rows.size(); ++r) {
    if (!RowSatisfied(encoding.rows[r], values)) out.push_back(static_cast<int>(r));
  }
  return out;
}

int64_t ObjectiveValue(const MilpEncoding& encoding,
                       std::span<const int64_t> values) {
  int64_t total = 0;
  for (const auto& t : encoding.objective) total += t.coefficient * values[t.variable];
  return total;
}

}  // namespace vsfplace
