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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_map>

#include "vsfplace/milp_export.h"

namespace vsfplace {
namespace {

constexpr int kTermsPerLine = 8;
constexpr std::string_view kBigMTag = "big-M: ";

const char* SenseToken(RowSense sense) {
  switch (sense) {
    case RowSense::kLessEqual: return "<=";
    case RowSense::kGreaterEqual: return ">=";
    case RowSense::kEqual: return "=";
  }
  return "?";
}

void WriteTerms(const std::vector<MilpTerm>& terms,
                const std::vector<MilpVariable>& variables, std::ostream& out) {
  if (terms.empty()) {
    out << " 0";
    return;
  }
  for (size_t k = 0; k < terms.size(); ++k) {
    if (k > 0 && k % kTermsPerLine == 0) out << "\n  ";
    const int64_t c = terms[k].coefficient;
    if (c < 0) {
      out << " -";
    } else if (k > 0) {
      out << " +";
    }
    const int64_t magnitude = c < 0 ? -c : c;
    if (magnitude != 1) out << ' ' << magnitude;
    out << ' ' << variables[terms[k].variable].name;
  }
}

std::optional<int64_t> ParseInt(std::string_view token) {
  int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    return std::nullopt;
  }
  return value;
}

std::vector<std::string> Tokens(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string Trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

struct RawTerm {
  int64_t coefficient;
  std::string name;
};

struct RawRow {
  std::string name;
  std::vector<RawTerm> terms;
  RowSense sense = RowSense::kLessEqual;
  int64_t rhs = 0;
};

// Parses "name: expr [sense rhs]". `constraint` selects whether a sense and
// right-hand side are required.
RawRow ParseStatement(const std::string& statement, bool constraint) {
  const size_t colon = statement.find(':');
  if (colon == std::string::npos) {
    throw LpParseError("statement without a name: '" + statement + "'");
  }
  RawRow row;
  row.name = Trim(std::string_view(statement).substr(0, colon));
  const std::vector<std::string> tokens =
      Tokens(std::string_view(statement).substr(colon + 1));

  int64_t sign = 1;
  int64_t coefficient = 1;
  bool has_coefficient = false;
  size_t k = 0;
  bool has_sense = false;
  for (; k < tokens.size(); ++k) {
    const std::string& t = tokens[k];
    if (t == "+") {
      sign = 1;
    } else if (t == "-") {
      sign = -1;
    } else if (t == "<=" || t == ">=" || t == "=") {
      row.sense = t == "<=" ? RowSense::kLessEqual
                  : t == ">=" ? RowSense::kGreaterEqual
                              : RowSense::kEqual;
      has_sense = true;
      ++k;
      break;
    } else if (auto value = ParseInt(t)) {
      coefficient = *value;
      has_coefficient = true;
    } else {
      row.terms.push_back({sign * coefficient, t});
      sign = 1;
      coefficient = 1;
      has_coefficient = false;
    }
  }
  if (has_coefficient && coefficient != 0) {
    throw LpParseError("constant terms are not supported in '" + row.name + "'");
  }
  if (constraint) {
    if (!has_sense || k + 1 != tokens.size()) {
      throw LpParseError("malformed constraint '" + row.name + "'");
    }
    auto rhs = ParseInt(tokens[k]);
    if (!rhs) throw LpParseError("bad right-hand side in '" + row.name + "'");
    row.rhs = *rhs;
  } else if (has_sense) {
    throw LpParseError("objective cannot carry a sense");
  }
  return row;
}

}  // namespace

void WriteLp(const MilpEncoding& encoding, std::ostream& out) {
  out << "\\ " << kBigMTag << encoding.big_m << '\n';
  for (const auto& c : encoding.comments) out << "\\ " << c << '\n';
  out << "Minimize\n obj:";
  WriteTerms(encoding.objective, encoding.variables, out);
  out << "\nSubject To\n";
  for (const auto& row : encoding.rows) {
    out << ' ' << row.name << ':';
    WriteTerms(row.terms, encoding.variables, out);
    out << ' ' << SenseToken(row.sense) << ' ' << row.rhs << '\n';
  }
  out << "Bounds\n";
  for (const auto& v : encoding.variables) {
    if (v.kind != VariableKind::kInteger) continue;
    if (v.upper) {
      out << ' ' << v.lower << " <= " << v.name << " <= " << *v.upper << '\n';
    } else {
      out << ' ' << v.name << " >= " << v.lower << '\n';
    }
  }
  out << "Binary\n";
  for (const auto& v : encoding.variables) {
    if (v.kind == VariableKind::kBinary) out << ' ' << v.name << '\n';
  }
  out << "General\n";
  for (const auto& v : encoding.variables) {
    if (v.kind == VariableKind::kInteger) out << ' ' << v.name << '\n';
  }
  out << "End\n";
}

std::string ToLpString(const MilpEncoding& encoding) {
  std::ostringstream out;
  WriteLp(encoding, out);
  return out.str();
}

MilpEncoding ParseLp(std::string_view text) {
  enum class Section { kNone, kObjective, kConstraints, kBounds, kBinary, kGeneral, kEnd };
  MilpEncoding encoding;
  Section section = Section::kNone;
  std::vector<std::string> statements;  // objective or constraints, joined
  std::optional<RawRow> objective;
  std::vector<RawRow> rows;
  std::vector<std::string> binaries;
  std::vector<std::string> generals;
  struct RawBound {
    int64_t lower = 0;
    std::optional<int64_t> upper;
  };
  std::unordered_map<std::string, RawBound> bounds;
  bool saw_big_m = false;

  auto flush = [&]() {
    for (const auto& s : statements) {
      if (section == Section::kObjective) {
        if (objective) throw LpParseError("more than one objective");
        objective = ParseStatement(s, false);
      } else {
        rows.push_back(ParseStatement(s, true));
      }
    }
    statements.clear();
  };

  std::istringstream in{std::string(text)};
  std::string raw_line;
  while (std::getline(in, raw_line)) {
    if (!raw_line.empty() && raw_line.back() == '\r') raw_line.pop_back();
    if (raw_line.starts_with("\\")) {
      std::string comment = raw_line.substr(1);
      if (comment.starts_with(" ")) comment.erase(0, 1);
      if (comment.starts_with(kBigMTag) && !saw_big_m) {
        auto value = ParseInt(std::string_view(comment).substr(kBigMTag.size()));
        if (!value) throw LpParseError("bad big-M comment");
        encoding.big_m = *value;
        saw_big_m = true;
      } else {
        encoding.comments.push_back(comment);
      }
      continue;
    }
    const std::string line = Trim(raw_line);
    if (line.empty()) continue;
    const std::string keyword = Lower(line);
    Section next = Section::kNone;
    if (keyword == "minimize") next = Section::kObjective;
    else if (keyword == "subject to") next = Section::kConstraints;
    else if (keyword == "bounds") next = Section::kBounds;
    else if (keyword == "binary") next = Section::kBinary;
    else if (keyword == "general") next = Section::kGeneral;
    else if (keyword == "end") next = Section::kEnd;
    if (next != Section::kNone) {
      flush();
      section = next;
      continue;
    }
    switch (section) {
      case Section::kObjective:
      case Section::kConstraints:
        if (line.find(':') != std::string::npos) {
          statements.push_back(line);
        } else if (!statements.empty()) {
          statements.back() += ' ' + line;
        } else {
          throw LpParseError("expression without a name: '" + line + "'");
        }
        break;
      case Section::kBounds: {
        const auto t = Tokens(line);
        if (t.size() == 5 && t[1] == "<=" && t[3] == "<=") {
          auto lo = ParseInt(t[0]);
          auto hi = ParseInt(t[4]);
          if (!lo || !hi) throw LpParseError("bad bound: '" + line + "'");
          bounds[t[2]] = {*lo, *hi};
        } else if (t.size() == 3 && t[1] == ">=") {
          auto lo = ParseInt(t[2]);
          if (!lo) throw LpParseError("bad bound: '" + line + "'");
          bounds[t[0]].lower = *lo;
        } else if (t.size() == 3 && t[1] == "<=") {
          auto hi = ParseInt(t[2]);
          if (!hi) throw LpParseError("bad bound: '" + line + "'");
          bounds[t[0]].upper = *hi;
        } else {
          throw LpParseError("unsupported bound: '" + line + "'");
        }
        break;
      }
      case Section::kBinary:
        for (auto& name : Tokens(line)) binaries.push_back(name);
        break;
      case Section::kGeneral:
        for (auto& name : Tokens(line)) generals.push_back(name);
        break;
      case Section::kNone:
      case Section::kEnd:
        throw LpParseError("content outside of a section: '" + line + "'");
    }
  }
  flush();
  if (section != Section::kEnd) throw LpParseError("missing End");
  if (!saw_big_m) throw LpParseError("missing big-M comment");

  std::unordered_map<std::string, int> index;
  auto declare = [&](const std::string& name, VariableKind kind) {
    if (!index.emplace(name, static_cast<int>(encoding.variables.size())).second) {
      throw LpParseError("variable declared twice: " + name);
    }
    MilpVariable v{name, kind, 0, std::nullopt};
    if (auto it = bounds.find(name); it != bounds.end()) {
      v.lower = it->second.lower;
      v.upper = it->second.upper;
    }
    encoding.variables.push_back(std::move(v));
  };
  for (const auto& name : binaries) declare(name, VariableKind::kBinary);
  for (const auto& name : generals) declare(name, VariableKind::kInteger);

  auto resolve = [&](const std::vector<RawTerm>& raw) {
    std::vector<MilpTerm> terms;
    for (const auto& t : raw) {
      auto it = index.find(t.name);
      if (it == index.end()) throw LpParseError("undeclared variable: " + t.name);
      terms.push_back({t.coefficient, it->second});
    }
    return terms;
  };
  if (objective) encoding.objective = resolve(objective->terms);
  for (const auto& r : rows) {
    encoding.rows.push_back({r.name, resolve(r.terms), r.sense, r.rhs});
  }
  return encoding;
}

}  // namespace vsfplace
