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

#include "q2g/persistence/dot.hpp"

#include <array>
#include <charconv>
#include <sstream>

namespace q2g {

namespace {

std::string shortest(double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

}  // namespace

std::string export_dot(const Graph& g) {
  if (g.empty()) return "graph G {}\n";
  std::ostringstream os;
  os << "graph G {\n";
  for (VertexId v : g.vertices()) {
    const VertexAttrs& a = g.attrs(v);
    os << "  " << v.value << " [pos=\"" << shortest(a.position.x) << ',' << shortest(a.position.y) << '"';
    if (a.is_input) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (const Edge& e : g.edges()) os << "  " << e.lo.value << " -- " << e.hi.value << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace q2g
