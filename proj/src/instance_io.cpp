// Copyright 2026 The GOAS Solver Authors
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

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "goas/error.hpp"
#include "goas/io.hpp"

namespace goas {

namespace {

struct Line {
  int number;
  std::vector<std::string> fields;
};

std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.fields.push_back(w);
    if (!line.fields.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void Fail(const Line& line, const std::string& what) {
  throw Error(ErrorCode::kSyntaxError,
              "line " + std::to_string(line.number) + ": " + what);
}

Rational Number(const Line& line, std::size_t field, const char* name) {
  if (field >= line.fields.size()) Fail(line, std::string("missing ") + name);
  auto value = ParseRational(line.fields[field]);
  if (!value) {
    Fail(line, std::string("bad ") + name + " '" + line.fields[field] + "'");
  }
  return *value;
}

void ExpectArity(const Line& line, std::size_t n) {
  if (line.fields.size() != n) {
    Fail(line, "'" + line.fields[0] + "' takes " + std::to_string(n - 1) +
                   " field(s), got " + std::to_string(line.fields.size() - 1));
  }
}

void CheckHeader(const std::vector<Line>& lines, std::string_view header) {
  if (lines.empty()) {
    throw Error(ErrorCode::kSyntaxError, "empty document");
  }
  const Line& first = lines.front();
  if (first.fields[0] != header) {
    Fail(first, "expected header '" + std::string(header) + "'");
  }
  ExpectArity(first, 2);
  if (first.fields[1] != std::to_string(kFormatVersion)) {
    Fail(first, "unsupported format version " + first.fields[1]);
  }
}

struct Scalar {
  std::optional<Rational> value;
  void Set(const Line& line, Rational v) {
    if (value) Fail(line, "duplicate '" + line.fields[0] + "'");
    value = std::move(v);
  }
};

}  // namespace

Instance ParseInstance(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  CheckHeader(lines, kInstanceHeader);
  std::optional<std::string> root;
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
  Scalar budget, threshold;
  std::vector<Rational> alphabet;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& key = line.fields[0];
    if (key == "root") {
      ExpectArity(line, 2);
      if (root) Fail(line, "duplicate 'root'");
      root = line.fields[1];
    } else if (key == "vertex") {
      ExpectArity(line, 3);
      vertices.push_back({line.fields[1], Number(line, 2, "prize")});
    } else if (key == "edge") {
      ExpectArity(line, 4);
      edges.push_back(
          {line.fields[1], line.fields[2], Number(line, 3, "cost")});
    } else if (key == "budget") {
      ExpectArity(line, 2);
      budget.Set(line, Number(line, 1, "budget"));
    } else if (key == "threshold") {
      ExpectArity(line, 2);
      threshold.Set(line, Number(line, 1, "threshold"));
    } else if (key == "alphabet") {
      if (!alphabet.empty()) Fail(line, "duplicate 'alphabet'");
      if (line.fields.size() < 2) Fail(line, "empty alphabet");
      for (std::size_t f = 1; f < line.fields.size(); ++f) {
        alphabet.push_back(Number(line, f, "alphabet value"));
      }
    } else {
      Fail(line, "unknown record '" + key + "'");
    }
  }
  if (!root) throw Error(ErrorCode::kSyntaxError, "missing 'root' record");
  if (!budget.value) throw Error(ErrorCode::kSyntaxError, "missing 'budget' record");
  return BuildInstance(vertices, edges, *root, *budget.value,
                       threshold.value.value_or(Rational(0)))
      .WithDeclaredAlphabet(std::move(alphabet));
}

std::string SerializeInstance(const Instance& inst) {
  std::ostringstream out;
  out << kInstanceHeader << ' ' << kFormatVersion << '\n';
  out << "root " << inst.name(inst.root()) << '\n';
  for (const VertexSpec& v : inst.VertexSpecs()) {
    out << "vertex " << v.id << ' ' << FormatRational(v.prize) << '\n';
  }
  for (const EdgeSpec& e : inst.EdgeSpecs()) {
    out << "edge " << e.parent << ' ' << e.child << ' '
        << FormatRational(e.cost) << '\n';
  }
  out << "budget " << FormatRational(inst.budget()) << '\n';
  out << "threshold " << FormatRational(inst.threshold()) << '\n';
  if (!inst.declared_alphabet().empty()) {
    out << "alphabet";
    for (const Rational& c : inst.declared_alphabet()) {
      out << ' ' << FormatRational(c);
    }
    out << '\n';
  }
  return out.str();
}

ContainerModel ParseContainerModel(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  CheckHeader(lines, kContainerHeader);
  ContainerModel model;
  Scalar budget, threshold;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& key = line.fields[0];
    if (key == "container") {
      if (line.fields.size() < 3) Fail(line, "container needs an id and a cost");
      Container c{line.fields[1], Number(line, 2, "cost"), {}};
      c.penetration_list.assign(line.fields.begin() + 3, line.fields.end());
      model.containers.push_back(std::move(c));
    } else if (key == "target") {
      ExpectArity(line, 4);
      model.targets.push_back(
          {line.fields[1], Number(line, 2, "value"), line.fields[3]});
    } else if (key == "budget") {
      ExpectArity(line, 2);
      budget.Set(line, Number(line, 1, "budget"));
    } else if (key == "threshold") {
      ExpectArity(line, 2);
      threshold.Set(line, Number(line, 1, "threshold"));
    } else {
      Fail(line, "unknown record '" + key + "'");
    }
  }
  if (!budget.value) throw Error(ErrorCode::kSyntaxError, "missing 'budget' record");
  model.budget = *budget.value;
  model.threshold = threshold.value.value_or(Rational(0));
  return model;
}

std::string SerializeContainerModel(const ContainerModel& model) {
  std::ostringstream out;
  out << kContainerHeader << ' ' << kFormatVersion << '\n';
  for (const Container& c : model.containers) {
    out << "container " << c.id << ' ' << FormatRational(c.cost);
    for (const std::string& dep : c.penetration_list) out << ' ' << dep;
    out << '\n';
  }
  for (const Target& t : model.targets) {
    out << "target " << t.id << ' ' << FormatRational(t.value) << ' '
        << t.location << '\n';
  }
  out << "budget " << FormatRational(model.budget) << '\n';
  out << "threshold " << FormatRational(model.threshold) << '\n';
  return out.str();
}

Instance ParseAnyDocument(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  if (!lines.empty() && lines.front().fields[0] == kContainerHeader) {
    return ContainersToTree(ParseContainerModel(text));
  }
  return ParseInstance(text);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace goas
