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

#ifndef Q2G_ORACLE_HPP
#define Q2G_ORACLE_HPP

// Brute-force quantum semantics for graph states. Everything here works on
// dense statevectors so that it shares no code path with the graph rewrite
// engine it is used to check.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "q2g/graph.hpp"
#include "q2g/oracle/clifford.hpp"
#include "q2g/oracle/statevector.hpp"
#include "q2g/transforms.hpp"

namespace q2g::oracle {

inline constexpr std::size_t kDefaultQubitCap = 12;
inline constexpr std::size_t kDefaultLcQubitCap = 5;
inline constexpr std::size_t kRuleCheckVertexCap = 5;

/// Environment variable overriding kDefaultQubitCap.
inline constexpr const char* kQubitCapEnv = "Q2G_MAX_QUBITS";

/// kDefaultQubitCap, or the positive integer in $Q2G_MAX_QUBITS.
std::size_t default_qubit_cap();

/// Pauli string with a global phase i^phase_exponent.
struct PauliString {
  std::vector<PauliOp> letters;
  std::uint8_t phase_exponent = 0;

  std::string to_string() const;
  bool operator==(const PauliString&) const = default;
};

void apply_pauli_string(StateVector& sv, const PauliString& p);

/// (prod over edges of CZ) applied to |+>^n. Throws resource-limit above
/// `max_qubits`.
StateVector build_graph_state(const Graph& g, std::size_t max_qubits = default_qubit_cap());

/// K_j: X on j, Z on every neighbour of j.
PauliString correlation_operator(const Graph& g, VertexId j);

/// True iff every correlation operator of `g` fixes `sv`.
bool stabilized_by(const StateVector& sv, const Graph& g);
bool verify_stabilizers(const Graph& g, std::size_t max_qubits = default_qubit_cap());

/// Checks that exp(-i pi/4 X_a) prod_{b in N_a} exp(i pi/4 Z_b) maps |G> onto
/// the graph state of the local complement at a, up to global phase.
bool lc_unitary_check(const Graph& g, VertexId a, std::size_t max_qubits = default_qubit_cap());

struct Projection {
  /// Remaining qubits, in their original relative order.
  StateVector state;
  double probability = 0.0;
};

/// Projects `qubit` onto the eigenvector of `op` with eigenvalue `outcome`
/// (+1 or -1) and removes it from the register.
Projection project_pauli(const StateVector& sv, std::size_t qubit, PauliOp op, int outcome);

struct StateEquivalence {
  bool equivalent = false;
  LocalCliffordOp witness;
};

/// Searches all 24^n tensor products of single-qubit Cliffords for one that
/// maps `a` onto `b` up to global phase. The search meets in the middle: the
/// left half of the register is enumerated against `a` and the right half
/// (inverted) against `b`, then candidates are confirmed on the full state.
StateEquivalence states_lc_equivalent(const StateVector& a, const StateVector& b,
                                      std::size_t max_qubits = kDefaultLcQubitCap);

/// Straight enumeration of all 24^n candidates. Reference for testing the
/// meet-in-the-middle search; only practical for a handful of qubits.
StateEquivalence states_lc_equivalent_exhaustive(const StateVector& a, const StateVector& b,
                                                 std::size_t max_qubits = 3);

/// Measures step.target of |G> with outcome +1 and checks that the result is
/// locally Clifford-equivalent to the graph state the rewrite rule produces.
bool verify_measurement_rule(const Graph& g, const MeasurementStep& step,
                             XRule rule = XRule::kLcBAB);

}  // namespace q2g::oracle

#endif  // Q2G_ORACLE_HPP
