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

#include "q2g/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <unordered_map>

#include "q2g/error.hpp"

namespace q2g::oracle {

std::size_t default_qubit_cap() {
  if (const char* env = std::getenv(kQubitCapEnv)) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0 && value <= 30) {
      return static_cast<std::size_t>(value);
    }
  }
  return kDefaultQubitCap;
}

namespace {

void require_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw Error(rule::kResourceLimit, std::string(what) + " needs " + std::to_string(n) +
                                          " qubits; the cap is " + std::to_string(cap));
  }
}

Mat2 pauli_matrix(PauliOp op) {
  switch (op) {
    case PauliOp::I: return gates::identity();
    case PauliOp::X: return gates::pauli_x();
    case PauliOp::Y: return gates::pauli_y();
    case PauliOp::Z: return gates::pauli_z();
  }
  return gates::identity();
}

}  // namespace

std::string PauliString::to_string() const {
  static constexpr const char* kPhases[] = {"+", "+i", "-", "-i"};
  std::string out = kPhases[phase_exponent % 4];
  for (PauliOp p : letters) out += pauli_letter(p);
  return out;
}

void apply_pauli_string(StateVector& sv, const PauliString& p) {
  if (p.letters.size() != sv.n_qubits) {
    throw std::invalid_argument("Pauli string length does not match the state");
  }
  for (std::size_t q = 0; q < p.letters.size(); ++q) {
    if (p.letters[q] != PauliOp::I) apply_single_qubit(sv, q, pauli_matrix(p.letters[q]));
  }
  static const Amplitude kPhase[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Amplitude phase = kPhase[p.phase_exponent % 4];
  if (phase != Amplitude{1, 0}) {
    for (Amplitude& a : sv.amplitudes) a *= phase;
  }
}

StateVector build_graph_state(const Graph& g, std::size_t max_qubits) {
  const std::size_t n = g.vertex_count();
  require_cap(n, max_qubits, "graph state");
  const double amp = std::pow(2.0, -0.5 * static_cast<double>(n));
  StateVector sv(n, std::vector<Amplitude>(std::size_t{1} << n, Amplitude{amp, 0.0}));
  for (const Edge& e : g.edges()) apply_cz(sv, e.lo.index(), e.hi.index());
  return sv;
}

PauliString correlation_operator(const Graph& g, VertexId j) {
  const auto& nbrs = g.neighbours(j);
  PauliString k;
  k.letters.assign(g.vertex_count(), PauliOp::I);
  k.letters[j.index()] = PauliOp::X;
  for (VertexId b : nbrs) k.letters[b.index()] = PauliOp::Z;
  return k;
}

bool stabilized_by(const StateVector& sv, const Graph& g) {
  if (sv.n_qubits != g.vertex_count()) return false;
  for (VertexId j : g.vertices()) {
    StateVector image = sv;
    apply_pauli_string(image, correlation_operator(g, j));
    if (!approx_equal(image, sv)) return false;
  }
  return true;
}

bool verify_stabilizers(const Graph& g, std::size_t max_qubits) {
  return stabilized_by(build_graph_state(g, max_qubits), g);
}

bool lc_unitary_check(const Graph& g, VertexId a, std::size_t max_qubits) {
  StateVector sv = build_graph_state(g, max_qubits);
  apply_single_qubit(sv, a.index(), gates::sqrt_minus_i_x());
  for (VertexId b : g.neighbours(a)) apply_single_qubit(sv, b.index(), gates::sqrt_i_z());
  return equal_up_to_phase(sv, build_graph_state(local_complement(g, a), max_qubits));
}

Projection project_pauli(const StateVector& sv, std::size_t qubit, PauliOp op, int outcome) {
  if (op == PauliOp::I) throw Error(rule::kValidation, "cannot project onto the identity");
  if (outcome != 1 && outcome != -1) throw Error(rule::kValidation, "outcome must be +1 or -1");
  if (qubit >= sv.n_qubits) throw Error(rule::kNotFound, "qubit index out of range");

  constexpr double kInvSqrt2 = 0.70710678118654752440;
  const double sign = static_cast<double>(outcome);
  Amplitude e0{1.0, 0.0};
  Amplitude e1{0.0, 0.0};
  switch (op) {
    case PauliOp::Z:
      if (outcome < 0) std::swap(e0, e1);
      break;
    case PauliOp::X:
      e0 = kInvSqrt2;
      e1 = sign * kInvSqrt2;
      break;
    case PauliOp::Y:
      e0 = kInvSqrt2;
      e1 = Amplitude{0.0, sign * kInvSqrt2};
      break;
    case PauliOp::I: break;
  }

  const std::size_t n = sv.n_qubits;
  const std::size_t mask = qubit_mask(n, qubit);
  StateVector out = StateVector::zeros(n - 1);
  for (std::size_t r = 0; r < out.amplitudes.size(); ++r) {
    const std::size_t low = r & (mask - 1);
    const std::size_t i0 = ((r - low) << 1) | low;
    out.amplitudes[r] = std::conj(e0) * sv.amplitudes[i0] + std::conj(e1) * sv.amplitudes[i0 | mask];
  }
  const double probability = norm_squared(out.amplitudes);
  if (probability <= kTolerance) {
    throw Error(rule::kImpossibleOutcome, "outcome has zero probability");
  }
  normalize(out);
  return {std::move(out), probability};
}

// --------------------------------------------------- local Clifford search

namespace {

/// Applies the Clifford tuple encoded by `code` (base 24, first qubit most
/// significant) to qubits [first, first + count).
void apply_tuple(StateVector& sv, std::size_t first, std::size_t count, std::uint64_t code,
                 bool invert) {
  const auto& elements = single_qubit_cliffords();
  for (std::size_t k = count; k-- > 0;) {
    std::size_t element = code % kCliffordGroupOrder;
    code /= kCliffordGroupOrder;
    if (invert) element = clifford_inverse(element);
    if (element != 0) serial::apply_single_qubit(sv, first + k, elements[element]);
  }
}

void decode_tuple(std::uint64_t code, std::size_t count, bool invert, std::uint8_t* out) {
  for (std::size_t k = count; k-- > 0;) {
    std::size_t element = code % kCliffordGroupOrder;
    code /= kCliffordGroupOrder;
    out[k] = static_cast<std::uint8_t>(invert ? clifford_inverse(element) : element);
  }
}

std::uint64_t power24(std::size_t k) {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < k; ++i) p *= kCliffordGroupOrder;
  return p;
}

/// Hash of the phase-normalized state, quantized so that states equal to
/// well within the tolerance collide.
std::uint64_t phase_free_key(const StateVector& sv) {
  const std::size_t k = dominant_index(sv.amplitudes);
  const Amplitude ref = sv.amplitudes[k];
  const double mag = std::abs(ref);
  const Amplitude unphase = mag > 0 ? std::conj(ref) / mag : Amplitude{1, 0};
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::int64_t v) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ull;
  };
  for (const Amplitude& a : sv.amplitudes) {
    const Amplitude z = a * unphase;
    mix(std::llround(z.real() * 1e6));
    mix(std::llround(z.imag() * 1e6));
  }
  return h;
}

bool same_magnitude(const StateVector& a, const StateVector& b) {
  return std::abs(norm_squared(a.amplitudes) - norm_squared(b.amplitudes)) <= kTolerance;
}

}  // namespace

StateEquivalence states_lc_equivalent(const StateVector& a, const StateVector& b,
                                      std::size_t max_qubits) {
  require_cap(std::max(a.n_qubits, b.n_qubits), max_qubits, "local Clifford search");
  if (a.n_qubits != b.n_qubits || !same_magnitude(a, b)) return {};
  const std::size_t n = a.n_qubits;
  if (n == 0) return {true, LocalCliffordOp{}};

  const std::size_t left = n / 2;
  const std::size_t right = n - left;
  const std::uint64_t left_count = power24(left);
  const std::uint64_t right_count = power24(right);

  // Right half: key of (I (x) C) b for every tuple C.
  std::vector<std::uint64_t> right_keys(right_count);
  const std::int64_t rc = static_cast<std::int64_t>(right_count);
#pragma omp parallel for schedule(static)
  for (std::int64_t code = 0; code < rc; ++code) {
    StateVector sv = b;
    apply_tuple(sv, left, right, static_cast<std::uint64_t>(code), false);
    right_keys[static_cast<std::size_t>(code)] = phase_free_key(sv);
  }
  std::unordered_multimap<std::uint64_t, std::uint64_t> table;
  table.reserve(right_count);
  for (std::uint64_t code = 0; code < right_count; ++code) table.emplace(right_keys[code], code);

  // Left half: look up (A (x) I) a. The witness is A (x) C^-1; the lowest A
  // with a confirmed match wins so the answer does not depend on scheduling.
  std::uint64_t best_left = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t best_right = 0;
  const std::int64_t lc = static_cast<std::int64_t>(left_count);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t code = 0; code < lc; ++code) {
    StateVector sv = a;
    apply_tuple(sv, 0, left, static_cast<std::uint64_t>(code), false);
    auto [begin, end] = table.equal_range(phase_free_key(sv));
    std::vector<std::uint64_t> candidates;
    for (auto it = begin; it != end; ++it) candidates.push_back(it->second);
    std::sort(candidates.begin(), candidates.end());
    for (std::uint64_t rcode : candidates) {
      StateVector full = sv;
      apply_tuple(full, left, right, rcode, true);
      if (!equal_up_to_phase(full, b)) continue;
#pragma omp critical(q2g_lc_best)
      {
        if (static_cast<std::uint64_t>(code) < best_left) {
          best_left = static_cast<std::uint64_t>(code);
          best_right = rcode;
        }
      }
      break;
    }
  }
  if (best_left == std::numeric_limits<std::uint64_t>::max()) return {};
  StateEquivalence out{true, LocalCliffordOp{std::vector<std::uint8_t>(n)}};
  decode_tuple(best_left, left, false, out.witness.elements.data());
  decode_tuple(best_right, right, true, out.witness.elements.data() + left);
  return out;
}

StateEquivalence states_lc_equivalent_exhaustive(const StateVector& a, const StateVector& b,
                                                 std::size_t max_qubits) {
  require_cap(std::max(a.n_qubits, b.n_qubits), max_qubits, "exhaustive Clifford search");
  if (a.n_qubits != b.n_qubits) return {};
  const std::size_t n = a.n_qubits;
  const std::uint64_t total = power24(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    StateVector sv = a;
    apply_tuple(sv, 0, n, code, false);
    if (equal_up_to_phase(sv, b)) {
      StateEquivalence out{true, LocalCliffordOp{std::vector<std::uint8_t>(n)}};
      decode_tuple(code, n, false, out.witness.elements.data());
      return out;
    }
  }
  return {};
}

bool verify_measurement_rule(const Graph& g, const MeasurementStep& step, XRule rule) {
  require_cap(g.vertex_count(), kRuleCheckVertexCap, "measurement rule check");
  const StepResult rewritten = apply_step(g, step, rule);
  const StateVector before = build_graph_state(g);
  const StateVector expected = build_graph_state(rewritten.graph);
  if (step.op == PauliOp::I) return states_lc_equivalent(before, expected).equivalent;

  const Projection measured = project_pauli(before, step.target.index(), step.op, +1);
  // Qubit order after projection: surviving pre-step labels ascending. Route
  // each to the qubit its post-step label occupies.
  std::vector<std::size_t> destination;
  destination.reserve(measured.state.n_qubits);
  for (VertexId v : g.vertices()) {
    if (v == step.target) continue;
    const auto mapped = rewritten.label_map.apply(v);
    if (!mapped) return false;
    destination.push_back(mapped->index());
  }
  const StateVector aligned = permute_qubits(measured.state, destination);
  return states_lc_equivalent(aligned, expected).equivalent;
}

}  // namespace q2g::oracle
