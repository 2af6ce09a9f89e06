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

#ifndef Q2G_ORACLE_CLIFFORD_HPP
#define Q2G_ORACLE_CLIFFORD_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "q2g/oracle/statevector.hpp"

namespace q2g::oracle {

inline constexpr std::size_t kCliffordGroupOrder = 24;

/// The single-qubit Clifford group modulo global phase, generated from H and
/// S by breadth-first closure. Element 0 is the identity; element order is
/// the BFS discovery order and is stable.
const std::array<Mat2, kCliffordGroupOrder>& single_qubit_cliffords();

/// Index of the inverse element.
std::size_t clifford_inverse(std::size_t index);

/// Word over {H, S} that produces the element, applied left to right.
const std::string& clifford_word(std::size_t index);

/// Tensor product of one single-qubit Clifford per qubit.
struct LocalCliffordOp {
  std::vector<std::uint8_t> elements;

  static LocalCliffordOp identity(std::size_t n) { return {std::vector<std::uint8_t>(n, 0)}; }
  bool operator==(const LocalCliffordOp&) const = default;
};

void apply_local_clifford(StateVector& sv, const LocalCliffordOp& op);

/// Named single-qubit unitaries.
namespace gates {
Mat2 identity();
Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();
Mat2 hadamard();
Mat2 phase_s();
/// exp(-i pi/4 X), the square root of -iX.
Mat2 sqrt_minus_i_x();
/// exp(+i pi/4 Z), the square root of iZ.
Mat2 sqrt_i_z();
}  // namespace gates

/// True when the two matrices agree up to a global phase.
bool equal_up_to_phase(const Mat2& a, const Mat2& b, double tol = kTolerance);

}  // namespace q2g::oracle

#endif  // Q2G_ORACLE_CLIFFORD_HPP
