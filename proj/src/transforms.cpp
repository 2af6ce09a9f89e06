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

#include "q2g/transforms.hpp"

#include <array>
#include <cstdint>
#include <deque>
#include <unordered_map>

#include "q2g/error.hpp"

namespace q2g {

char pauli_letter(PauliOp op) {
  switch (op) {
    case PauliOp::I: return 'I';
    case PauliOp::X: return 'X';
    case PauliOp::Y: return 'Y';
    case PauliOp::Z: return 'Z';
  }
  return '?';
}

std::optional<PauliOp> pauli_from_letter(char c) {
  switch (c) {
    case 'I': case 'i': return PauliOp::I;
    case 'X': case 'x': return PauliOp::X;
    case 'Y': case 'y': return PauliOp::Y;
    case 'Z': case 'z': return PauliOp::Z;
    default: return std::nullopt;
  }
}

namespace {

StepResult delete_measured(Graph g, VertexId a) {
  StepResult out;
  out.label_map = g.erase_vertex(a);
  out.graph = std::move(g);
  out.consumed = a;
  return out;
}

}  // namespace

StepResult measure_z(const Graph& g, VertexId a) { return delete_measured(g, a); }

StepResult measure_y(const Graph& g, VertexId a) {
  return delete_measured(local_complement(g, a), a);
}

StepResult measure_x(const Graph& g, VertexId a, std::optional<VertexId> b, XRule rule) {
  const auto& nbrs = g.neighbours(a);
  if (nbrs.empty()) {
    if (b) {
      throw Error(rule::kInvalidSpecialNeighbour,
                  "vertex " + std::to_string(a.value) +
                      " has no neighbours; no special neighbour may be given");
    }
    return delete_measured(g, a);
  }
  const VertexId special = b.value_or(*nbrs.begin());
  if (!nbrs.contains(special)) {
    throw Error(rule::kInvalidSpecialNeighbour, "vertex " + std::to_string(special.value) +
                                                    " is not a neighbour of vertex " +
                                                    std::to_string(a.value));
  }
  Graph work = g;
  if (rule == XRule::kLcBAB) work.complement_neighbourhood(special);
  work.complement_neighbourhood(a);
  work.complement_neighbourhood(special);
  StepResult out = delete_measured(std::move(work), a);
  out.special_neighbour = special;
  return out;
}

StepResult apply_step(const Graph& g, const MeasurementStep& step, XRule rule) {
  if (step.special_neighbour && step.op != PauliOp::X) {
    throw Error(rule::kInvalidSpecialNeighbour,
                std::string("a special neighbour is only meaningful for X, not ") +
                    pauli_letter(step.op));
  }
  switch (step.op) {
    case PauliOp::I: {
      (void)g.neighbours(step.target);  // target must still exist
      return StepResult{g, LabelMap::identity(g.vertex_count()), std::nullopt, std::nullopt};
    }
    case PauliOp::Z: return measure_z(g, step.target);
    case PauliOp::Y: return measure_y(g, step.target);
    case PauliOp::X: return measure_x(g, step.target, step.special_neighbour, rule);
  }
  throw Error(rule::kValidation, "unknown Pauli operator");
}

ReductionResult asg_reduce(const Graph& g, const std::vector<MeasurementStep>& steps,
                           XRule rule) {
  ReductionResult out;
  out.graph = g;
  out.cumulative = LabelMap::identity(g.vertex_count());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    StepResult result;
    try {
      result = apply_step(out.graph, steps[i], rule);
    } catch (const Error& e) {
      out.failure = StepFailure{i, e.rule(), e.what()};
      return out;
    }
    ReductionEntry entry;
    entry.index = i;
    entry.step = steps[i];
    entry.step.special_neighbour = result.special_neighbour;
    if (result.consumed) entry.consumed_original = out.cumulative.preimage(*result.consumed);
    out.cumulative = LabelMap::compose(out.cumulative, result.label_map);
    out.graph = result.graph;
    entry.result = std::move(result);
    out.journal.push_back(std::move(entry));
  }
  return out;
}

// ------------------------------------------------------ LC orbit search

namespace {

constexpr std::size_t kMaskVertices = 10;
using Rows = std::array<std::uint16_t, kMaskVertices>;

Rows to_rows(const Graph& g) {
  Rows rows{};
  for (const Edge& e : g.edges()) {
    rows[e.lo.index()] |= static_cast<std::uint16_t>(1u << e.hi.index());
    rows[e.hi.index()] |= static_cast<std::uint16_t>(1u << e.lo.index());
  }
  return rows;
}

std::uint64_t pack(const Rows& rows, std::size_t n) {
  std::uint64_t key = 0;
  int bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if (rows[i] >> j & 1u) key |= std::uint64_t{1} << bit;
    }
  }
  return key;
}

void lc_rows(Rows& rows, std::size_t a) {
  const std::uint16_t nbrs = rows[a];
  for (std::size_t b = 0; b < kMaskVertices; ++b) {
    if (nbrs >> b & 1u) rows[b] ^= static_cast<std::uint16_t>(nbrs & ~(1u << b));
  }
}

/// Component id per vertex, numbered by first appearance.
std::vector<int> components(const Graph& g) {
  std::vector<int> comp(g.vertex_count(), -1);
  int next = 0;
  for (VertexId start : g.vertices()) {
    if (comp[start.index()] >= 0) continue;
    std::deque<VertexId> queue{start};
    comp[start.index()] = next;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (VertexId u : g.neighbours(v)) {
        if (comp[u.index()] < 0) {
          comp[u.index()] = next;
          queue.push_back(u);
        }
      }
    }
    ++next;
  }
  return comp;
}

}  // namespace

LcEquivalence graphs_lc_equivalent(const Graph& g1, const Graph& g2, std::size_t max_vertices) {
  const std::size_t cap = std::min(max_vertices, kMaskVertices);
  if (g1.vertex_count() > cap || g2.vertex_count() > cap) {
    throw Error(rule::kResourceLimit, "local-equivalence search is limited to " +
                                          std::to_string(cap) + " vertices");
  }
  if (g1.vertex_count() != g2.vertex_count()) return {};
  if (components(g1) != components(g2)) return {};

  const std::size_t n = g1.vertex_count();
  const Rows start = to_rows(g1);
  const std::uint64_t start_key = pack(start, n);
  const std::uint64_t goal_key = pack(to_rows(g2), n);
  if (start_key == goal_key) return {true, {}};

  struct Parent {
    std::uint64_t key;
    std::uint8_t vertex;
  };
  std::unordered_map<std::uint64_t, Parent> parent;
  parent.emplace(start_key, Parent{start_key, 0});
  std::deque<Rows> frontier{start};
  while (!frontier.empty()) {
    const Rows rows = frontier.front();
    frontier.pop_front();
    const std::uint64_t key = pack(rows, n);
    for (std::size_t a = 0; a < n; ++a) {
      Rows next = rows;
      lc_rows(next, a);
      const std::uint64_t next_key = pack(next, n);
      if (!parent.emplace(next_key, Parent{key, static_cast<std::uint8_t>(a)}).second) continue;
      if (next_key == goal_key) {
        LcEquivalence out{true, {}};
        for (std::uint64_t k = goal_key; k != start_key; k = parent.at(k).key) {
          out.witness.emplace_back(static_cast<std::uint32_t>(parent.at(k).vertex + 1));
        }
        std::reverse(out.witness.begin(), out.witness.end());
        return out;
      }
      frontier.push_back(next);
    }
  }
  return {};
}

Graph replay_local_complements(const Graph& g, const std::vector<VertexId>& sequence) {
  Graph out = g;
  for (VertexId v : sequence) out.complement_neighbourhood(v);
  return out;
}

}  // namespace q2g
