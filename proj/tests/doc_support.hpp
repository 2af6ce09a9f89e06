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

#ifndef Q2G_TESTS_DOC_SUPPORT_HPP
#define Q2G_TESTS_DOC_SUPPORT_HPP

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "q2g/error.hpp"
#include "q2g/persistence/document.hpp"

namespace q2g::testing {

inline VertexAttrs random_attrs(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(-1000.0, 1000.0);
  VertexAttrs a;
  a.is_input = std::bernoulli_distribution(0.3)(rng);
  a.position = {coord(rng), coord(rng)};
  return a;
}

/// Engine-produced document: a random initial graph followed by up to
/// `max_ops` random operations, each applied through apply_operation.
inline GraphDocument random_document(std::mt19937_64& rng, std::size_t max_vertices = 7,
                                     std::size_t max_ops = 12) {
  GraphDocument doc;
  const std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_vertices)(rng);
  for (std::size_t i = 0; i < n; ++i) doc.graph.insert_vertex(random_attrs(rng));
  std::bernoulli_distribution coin(0.4);
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = i + 1; j <= n; ++j) {
      if (coin(rng)) doc.graph.insert_edge(VertexId{i}, VertexId{j});
    }
  }
  doc.initial = doc.graph;
  if (coin(rng)) doc.metadata["title"] = "doc " + std::to_string(rng() % 1000);

  const std::size_t ops = std::uniform_int_distribution<std::size_t>(0, max_ops)(rng);
  for (std::size_t k = 0; k < ops; ++k) {
    const std::size_t count = doc.graph.vertex_count();
    auto pick = [&] {
      return VertexId{std::uniform_int_distribution<std::uint32_t>(1, static_cast<std::uint32_t>(count))(rng)};
    };
    Operation op;
    const int kind = count == 0 ? 0 : std::uniform_int_distribution<int>(0, 8)(rng);
    switch (kind) {
      case 0: op = Operation::add_vertex(random_attrs(rng)); break;
      case 1: op = Operation::remove_vertex(pick()); break;
      case 2: op = Operation::add_edge(pick(), pick()); break;
      case 3: op = Operation::remove_edge(pick(), pick()); break;
      case 4: op = Operation::local_complement(pick()); break;
      case 5: op = Operation::measure(PauliOp::Z, pick()); break;
      case 6: op = Operation::measure(PauliOp::Y, pick()); break;
      case 7: op = Operation::measure(PauliOp::X, pick()); break;
      default: op = Operation::set_attrs(pick(), random_attrs(rng)); break;
    }
    try {
      apply_operation(doc, op);
    } catch (const Error&) {
      // Invalid random edits (loops, duplicates) are simply skipped.
    }
  }
  return doc;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace q2g::testing

#endif  // Q2G_TESTS_DOC_SUPPORT_HPP
