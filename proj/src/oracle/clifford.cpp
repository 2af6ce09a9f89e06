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

#include "q2g/oracle/clifford.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

namespace q2g::oracle {

namespace gates {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr Amplitude kI{0.0, 1.0};
}  // namespace

Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
Mat2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
Mat2 pauli_y() { return {0.0, -kI, kI, 0.0}; }
Mat2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }
Mat2 hadamard() { return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2}; }
Mat2 phase_s() { return {1.0, 0.0, 0.0, kI}; }
Mat2 sqrt_minus_i_x() {
  return {kInvSqrt2, -kI * kInvSqrt2, -kI * kInvSqrt2, kInvSqrt2};
}
Mat2 sqrt_i_z() {
  return {Amplitude{kInvSqrt2, kInvSqrt2}, 0.0, 0.0, Amplitude{kInvSqrt2, -kInvSqrt2}};
}

}  // namespace gates

bool equal_up_to_phase(const Mat2& a, const Mat2& b, double tol) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < 4; ++i) {
    if (std::abs(a[i]) > std::abs(a[k])) k = i;
  }
  if (std::abs(b[k]) <= tol) return false;
  const Amplitude phase = a[k] / b[k];
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(a[i] - phase * b[i]) > tol) return false;
  }
  return true;
}

namespace {

struct Group {
  std::array<Mat2, kCliffordGroupOrder> elements;
  std::array<std::string, kCliffordGroupOrder> words;
  std::array<std::size_t, kCliffordGroupOrder> inverse{};
};

Group build_group() {
  Group group;
  std::size_t count = 0;
  auto find = [&](const Mat2& m) -> std::ptrdiff_t {
    for (std::size_t i = 0; i < count; ++i) {
      if (equal_up_to_phase(group.elements[i], m)) return static_cast<std::ptrdiff_t>(i);
    }
    return -1;
  };
  group.elements[0] = gates::identity();
  group.words[0] = "";
  count = 1;
  std::deque<std::size_t> queue{0};
  const std::array<std::pair<char, Mat2>, 2> generators{
      {{'H', gates::hadamard()}, {'S', gates::phase_s()}}};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& [name, gen] : generators) {
      // Word applied left to right means the matrix is gen * current.
      const Mat2 next = multiply(gen, group.elements[cur]);
      if (find(next) >= 0) continue;
      if (count == kCliffordGroupOrder) throw std::logic_error("Clifford closure overflow");
      group.elements[count] = next;
      group.words[count] = group.words[cur] + name;
      queue.push_back(count);
      ++count;
    }
  }
  if (count != kCliffordGroupOrder) throw std::logic_error("Clifford closure incomplete");
  for (std::size_t i = 0; i < count; ++i) {
    const std::ptrdiff_t inv = find(adjoint(group.elements[i]));
    group.inverse[i] = static_cast<std::size_t>(inv);
  }
  return group;
}

const Group& group() {
  static const Group g = build_group();
  return g;
}

}  // namespace

const std::array<Mat2, kCliffordGroupOrder>& single_qubit_cliffords() { return group().elements; }

std::size_t clifford_inverse(std::size_t index) { return group().inverse.at(index); }

const std::string& clifford_word(std::size_t index) { return group().words.at(index); }

void apply_local_clifford(StateVector& sv, const LocalCliffordOp& op) {
  if (op.elements.size() != sv.n_qubits) {
    throw std::invalid_argument("local Clifford width does not match the state");
  }
  const auto& elements = single_qubit_cliffords();
  for (std::size_t q = 0; q < op.elements.size(); ++q) {
    if (op.elements[q] != 0) apply_single_qubit(sv, q, elements.at(op.elements[q]));
  }
}

}  // namespace q2g::oracle
