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

#ifndef Q2G_ORACLE_STATEVECTOR_HPP
#define Q2G_ORACLE_STATEVECTOR_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace q2g::oracle {

using Amplitude = std::complex<double>;

/// Absolute tolerance for every amplitude comparison in the oracle.
inline constexpr double kTolerance = 1e-9;

/// Dense n-qubit state. Qubit 0 is the most significant bit of the basis
/// index, so vertex label k lives on qubit k-1.
struct StateVector {
  std::size_t n_qubits = 0;
  std::vector<Amplitude> amplitudes{Amplitude{1.0, 0.0}};

  StateVector() = default;
  StateVector(std::size_t n, std::vector<Amplitude> amps);

  static StateVector zeros(std::size_t n);
  std::size_t dimension() const { return amplitudes.size(); }
};

/// Row-major 2x2 matrix.
using Mat2 = std::array<Amplitude, 4>;

Mat2 multiply(const Mat2& a, const Mat2& b);
Mat2 adjoint(const Mat2& m);

/// Bit of basis index `index` that holds `qubit` in an n-qubit register.
constexpr std::size_t qubit_mask(std::size_t n_qubits, std::size_t qubit) {
  return std::size_t{1} << (n_qubits - 1 - qubit);
}

// Two interchangeable kernel sets. `serial` is the plain reference; `parallel`
// splits the amplitude loop with OpenMP once the register is large enough to
// pay for the fork. Tests hold them to identical output.
namespace serial {
void apply_single_qubit(StateVector& sv, std::size_t qubit, const Mat2& m);
void apply_cz(StateVector& sv, std::size_t q1, std::size_t q2);
double norm_squared(std::span<const Amplitude> amps);
Amplitude inner_product(std::span<const Amplitude> bra, std::span<const Amplitude> ket);
}  // namespace serial

namespace parallel {
/// Registers smaller than this run serially even in the parallel kernels.
inline constexpr std::size_t kMinParallelDimension = std::size_t{1} << 14;

void apply_single_qubit(StateVector& sv, std::size_t qubit, const Mat2& m);
void apply_cz(StateVector& sv, std::size_t q1, std::size_t q2);
double norm_squared(std::span<const Amplitude> amps);
Amplitude inner_product(std::span<const Amplitude> bra, std::span<const Amplitude> ket);
}  // namespace parallel

// Default entry points used by the rest of the oracle.
using parallel::apply_cz;
using parallel::apply_single_qubit;
using parallel::inner_product;
using parallel::norm_squared;

void normalize(StateVector& sv);
bool is_normalized(const StateVector& sv, double tol = kTolerance);

/// Elementwise equality within `tol`.
bool approx_equal(const StateVector& a, const StateVector& b, double tol = kTolerance);
/// Equality up to a global phase: b is compared against a after aligning the
/// phase of a's largest-magnitude amplitude.
bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol = kTolerance);

/// Index of the first amplitude whose magnitude is within `tol` of the
/// largest one.
std::size_t dominant_index(std::span<const Amplitude> amps, double tol = kTolerance);

/// Reorders qubits: qubit i of `sv` becomes qubit `destination[i]`.
StateVector permute_qubits(const StateVector& sv, std::span<const std::size_t> destination);

StateVector tensor(const StateVector& a, const StateVector& b);

}  // namespace q2g::oracle

#endif  // Q2G_ORACLE_STATEVECTOR_HPP
