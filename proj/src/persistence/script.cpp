// Copyright 2026 The q2graph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "q2g/persistence/script.hpp"

#include <charconv>
#include <sstream>

#include "q2g/error.hpp"

namespace q2g {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

[[noreturn]] void fail(const std::string& message, std::size_t line) {
  throw Error(rule::kParse, message + " at line " + std::to_string(line));
}

VertexId parse_vertex(const Token& token, std::size_t line) {
  std::uint32_t value = 0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || value == 0) {
    fail("invalid vertex '" + std::string(token.text) + "'", line);
  }
  return VertexId{value};
}

void require_arity(const std::vector<Token>& tokens, std::size_t min_args, std::size_t max_args,
                   std::size_t line) {
  const std::size_t got = tokens.size() - 1;
  if (got >= min_args && got <= max_args) return;
  std::string expected = std::to_string(min_args);
  if (max_args != min_args) expected += " or " + std::to_string(max_args);
  fail("command '" + std::string(tokens[0].text) + "' expects " + expected + " argument" +
           (max_args == 1 ? "" : "s") + ", got " + std::to_string(got),
       line);
}

}  // namespace

Script parse_script(std::string_view text) {
  Script script;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;

    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string_view cmd = tokens[0].text;
    ScriptStep step;
    step.line = line_no;
    step.column = tokens[0].column;

    if (cmd == "V") {
      require_arity(tokens, 0, 0, line_no);
      step.op = Operation::add_vertex();
    } else if (cmd == "DEL") {
      require_arity(tokens, 1, 1, line_no);
      step.op = Operation::remove_vertex(parse_vertex(tokens[1], line_no));
    } else if (cmd == "E" || cmd == "UNE") {
      require_arity(tokens, 2, 2, line_no);
      const VertexId a = parse_vertex(tokens[1], line_no);
      const VertexId b = parse_vertex(tokens[2], line_no);
      step.op = cmd == "E" ? Operation::add_edge(a, b) : Operation::remove_edge(a, b);
    } else if (cmd == "LC") {
      require_arity(tokens, 1, 1, line_no);
      step.op = Operation::local_complement(parse_vertex(tokens[1], line_no));
    } else if (cmd == "Z" || cmd == "Y") {
      require_arity(tokens, 1, 1, line_no);
      step.op = Operation::measure(cmd == "Z" ? PauliOp::Z : PauliOp::Y, parse_vertex(tokens[1], line_no));
    } else if (cmd == "X") {
      require_arity(tokens, 1, 2, line_no);
      std::optional<VertexId> b;
      if (tokens.size() == 3) b = parse_vertex(tokens[2], line_no);
      step.op = Operation::measure(PauliOp::X, parse_vertex(tokens[1], line_no), b);
    } else {
      fail("unknown command '" + std::string(cmd) + "'", line_no);
    }
    script.steps.push_back(std::move(step));
  }
  return script;
}

std::string render_script(const Script& script) {
  std::ostringstream os;
  for (const ScriptStep& step : script.steps) {
    const Operation& op = step.op;
    switch (op.kind) {
      case OpKind::kAddVertex: os << "V"; break;
      case OpKind::kRemoveVertex: os << "DEL " << op.target.value; break;
      case OpKind::kAddEdge: os << "E " << op.target.value << ' ' << op.other->value; break;
      case OpKind::kRemoveEdge: os << "UNE " << op.target.value << ' ' << op.other->value; break;
      case OpKind::kLocalComplement: os << "LC " << op.target.value; break;
      case OpKind::kMeasureZ: os << "Z " << op.target.value; break;
      case OpKind::kMeasureY: os << "Y " << op.target.value; break;
      case OpKind::kMeasureX:
        os << "X " << op.target.value;
        if (op.other) os << ' ' << op.other->value;
        break;
      case OpKind::kSetAttrs:
        throw Error(rule::kValidation, "set_attrs has no script form");
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace q2g
