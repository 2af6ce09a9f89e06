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

#include "q2g/oracle/statevector.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace q2g::oracle {

StateVector::StateVector(std::size_t n, std::vector<Amplitude> amps)
    : n_qubits(n), amplitudes(std::move(amps)) {
  if (amplitudes.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("amplitude count does not match qubit count");
  }
}

StateVector StateVector::zeros(std::size_t n) {
  return StateVector(n, std::vector<Amplitude>(std::size_t{1} << n));
}

Mat2 multiply(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 adjoint(const Mat2& m) {
  return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

namespace serial {

void apply_single_qubit(StateVector& sv, std::size_t qubit, const Mat2& m) {
  const std::size_t mask = qubit_mask(sv.n_qubits, qubit);
  auto& amps = sv.amplitudes;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & mask) continue;
    const Amplitude a0 = amps[i];
    const Amplitude a1 = amps[i | mask];
    amps[i] = m[0] * a0 + m[1] * a1;
    amps[i | mask] = m[2] * a0 + m[3] * a1;
  }
}

void apply_cz(StateVector& sv, std::size_t q1, std::size_t q2) {
  const std::size_t both = qubit_mask(sv.n_qubits, q1) | qubit_mask(sv.n_qubits, q2);
  for (std::size_t i = 0; i < sv.amplitudes.size(); ++i) {
    if ((i & both) == both) sv.amplitudes[i] = -sv.amplitudes[i];
  }
}

double norm_squared(std::span<const Amplitude> amps) {
  double total = 0.0;
  for (const Amplitude& a : amps) total += std::norm(a);
  return total;
}

Amplitude inner_product(std::span<const Amplitude> bra, std::span<const Amplitude> ket) {
  Amplitude total{};
  for (std::size_t i = 0; i < bra.size(); ++i) total += std::conj(bra[i]) * ket[i];
  return total;
}

}  // namespace serial

namespace parallel {

void apply_single_qubit(StateVector& sv, std::size_t qubit, const Mat2& m) {
  const std::size_t mask = qubit_mask(sv.n_qubits, qubit);
  const std::size_t half = sv.amplitudes.size() / 2;
  Amplitude* amps = sv.amplitudes.data();
  // Enumerate the half of the basis with the target bit clear.
  const std::int64_t count = static_cast<std::int64_t>(half);
#pragma omp parallel for if (sv.amplitudes.size() >= kMinParallelDimension) schedule(static)
  for (std::int64_t k = 0; k < count; ++k) {
    const std::size_t low = static_cast<std::size_t>(k) & (mask - 1);
    const std::size_t i = ((static_cast<std::size_t>(k) - low) << 1) | low;
    const Amplitude a0 = amps[i];
    const Amplitude a1 = amps[i | mask];
    amps[i] = m[0] * a0 + m[1] * a1;
    amps[i | mask] = m[2] * a0 + m[3] * a1;
  }
}

void apply_cz(StateVector& sv, std::size_t q1, std::size_t q2) {
  const std::size_t both = qubit_mask(sv.n_qubits, q1) | qubit_mask(sv.n_qubits, q2);
  Amplitude* amps = sv.amplitudes.data();
  const std::int64_t count = static_cast<std::int64_t>(sv.amplitudes.size());
#pragma omp parallel for if (sv.amplitudes.size() >= kMinParallelDimension) schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    if ((static_cast<std::size_t>(i) & both) == both) amps[i] = -amps[i];
  }
}

double norm_squared(std::span<const Amplitude> amps) {
  double total = 0.0;
  const Amplitude* data = amps.data();
  const std::int64_t count = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for if (amps.size() >= kMinParallelDimension) reduction(+ : total)
  for (std::int64_t i = 0; i < count; ++i) total += std::norm(data[i]);
  return total;
}

Amplitude inner_product(std::span<const Amplitude> bra, std::span<const Amplitude> ket) {
  double re = 0.0;
  double im = 0.0;
  const std::int64_t count = static_cast<std::int64_t>(bra.size());
#pragma omp parallel for if (bra.size() >= kMinParallelDimension) reduction(+ : re, im)
  for (std::int64_t i = 0; i < count; ++i) {
    const Amplitude term = std::conj(bra[i]) * ket[i];
    re += term.real();
    im += term.imag();
  }
  return {re, im};
}

}  // namespace parallel

void normalize(StateVector& sv) {
  const double norm = std::sqrt(norm_squared(sv.amplitudes));
  if (norm == 0.0) throw std::domain_error("cannot normalize the zero vector");
  for (Amplitude& a : sv.amplitudes) a /= norm;
}

bool is_normalized(const StateVector& sv, double tol) {
  return std::abs(norm_squared(sv.amplitudes) - 1.0) <= tol;
}

bool approx_equal(const StateVector& a, const StateVector& b, double tol) {
  if (a.n_qubits != b.n_qubits) return false;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    if (std::abs(a.amplitudes[i] - b.amplitudes[i]) > tol) return false;
  }
  return true;
}

std::size_t dominant_index(std::span<const Amplitude> amps, double tol) {
  double best = 0.0;
  for (const Amplitude& a : amps) best = std::max(best, std::abs(a));
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (std::abs(amps[i]) >= best - tol) return i;
  }
  return 0;
}

bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
  if (a.n_qubits != b.n_qubits) return false;
  const std::size_t k = dominant_index(a.amplitudes);
  const Amplitude pa = a.amplitudes[k];
  const Amplitude pb = b.amplitudes[k];
  if (std::abs(pb) <= tol) return std::abs(pa) <= tol && approx_equal(a, b, tol);
  // Unit phase taking b onto a at the dominant index.
  const Amplitude phase = (pa / std::abs(pa)) / (pb / std::abs(pb));
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    if (std::abs(a.amplitudes[i] - phase * b.amplitudes[i]) > tol) return false;
  }
  return true;
}

StateVector permute_qubits(const StateVector& sv, std::span<const std::size_t> destination) {
  const std::size_t n = sv.n_qubits;
  if (destination.size() != n) throw std::invalid_argument("permutation size mismatch");
  StateVector out = StateVector::zeros(n);
  for (std::size_t i = 0; i < sv.amplitudes.size(); ++i) {
    std::size_t j = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if (i & qubit_mask(n, q)) j |= qubit_mask(n, destination[q]);
    }
    out.amplitudes[j] = sv.amplitudes[i];
  }
  return out;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  StateVector out = StateVector::zeros(a.n_qubits + b.n_qubits);
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    for (std::size_t j = 0; j < b.amplitudes.size(); ++j) {
      out.amplitudes[i * b.amplitudes.size() + j] = a.amplitudes[i] * b.amplitudes[j];
    }
  }
  return out;
}

}  // namespace q2g::oracle
