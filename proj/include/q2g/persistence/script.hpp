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

#ifndef Q2G_PERSISTENCE_SCRIPT_HPP
#define Q2G_PERSISTENCE_SCRIPT_HPP

// Line-oriented batch scripts (.q2gs). One command per line:
//
//   V            add a vertex
//   DEL v        delete vertex v
//   E a b        add edge a-b
//   UNE a b      remove edge a-b
//   LC a         local complementation at a
//   Z a | Y a    Pauli measurement of a
//   X a [b]      X measurement of a with special neighbour b
//
// '#' starts a comment; blank lines are skipped. Vertex labels refer to the
// graph as it stands when the line runs.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "q2g/persistence/document.hpp"

namespace q2g {

struct ScriptStep {
  Operation op;
  std::size_t line = 0;
  std::size_t column = 0;

  bool operator==(const ScriptStep&) const = default;
};

struct Script {
  std::vector<ScriptStep> steps;
  bool operator==(const Script&) const = default;
};

/// Throws a parse error whose message ends in "at line N".
Script parse_script(std::string_view text);

/// Inverse printer: one command per line, no comments.
std::string render_script(const Script& script);

}  // namespace q2g

#endif  // Q2G_PERSISTENCE_SCRIPT_HPP
