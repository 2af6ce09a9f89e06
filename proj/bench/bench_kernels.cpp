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

// Serial against OpenMP kernels. Run with OMP_NUM_THREADS set to compare.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "q2g/oracle/clifford.hpp"
#include "q2g/oracle/statevector.hpp"
#include "q2g/oracle/sweep.hpp"

namespace {

using namespace q2g::oracle;

StateVector plus_state(std::size_t n) {
  const double amp = 1.0 / std::sqrt(static_cast<double>(std::size_t{1} << n));
  return StateVector(n, std::vector<Amplitude>(std::size_t{1} << n, Amplitude{amp, 0.0}));
}

template <void (*Kernel)(StateVector&, std::size_t, const Mat2&)>
void BM_SingleQubit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  StateVector sv = plus_state(n);
  const Mat2 h = gates::hadamard();
  std::size_t q = 0;
  for (auto _ : state) {
    Kernel(sv, q, h);
    q = (q + 1) % n;
    benchmark::DoNotOptimize(sv.amplitudes.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sv.dimension()));
}

template <void (*Kernel)(StateVector&, std::size_t, std::size_t)>
void BM_Cz(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  StateVector sv = plus_state(n);
  std::size_t q = 0;
  for (auto _ : state) {
    Kernel(sv, q, (q + 1) % n);
    q = (q + 1) % n;
    benchmark::DoNotOptimize(sv.amplitudes.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sv.dimension()));
}

template <double (*Kernel)(std::span<const Amplitude>)>
void BM_Norm(benchmark::State& state) {
  const StateVector sv = plus_state(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(sv.amplitudes));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sv.dimension()));
}

const std::vector<RuleCase>& rule_cases() {
  static const std::vector<RuleCase> cases = [] {
    std::vector<RuleCase> out;
    for (std::size_t n = 2; n <= 4; ++n) {
      for (const q2g::Graph& g : all_labelled_graphs(n)) {
        for (auto& c : enumerate_rule_cases(g)) out.push_back(std::move(c));
      }
    }
    return out;
  }();
  return cases;
}

template <SweepReport (*Sweep)(std::span<const RuleCase>, q2g::XRule)>
void BM_VerifyRules(benchmark::State& state) {
  const auto& cases = rule_cases();
  for (auto _ : state) benchmark::DoNotOptimize(Sweep(cases, q2g::XRule::kLcBAB));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cases.size()));
}

BENCHMARK_TEMPLATE(BM_SingleQubit, serial::apply_single_qubit)->Name("single_qubit/serial")->DenseRange(12, 20, 4);
BENCHMARK_TEMPLATE(BM_SingleQubit, parallel::apply_single_qubit)->Name("single_qubit/parallel")->DenseRange(12, 20, 4);
BENCHMARK_TEMPLATE(BM_Cz, serial::apply_cz)->Name("cz/serial")->DenseRange(12, 20, 4);
BENCHMARK_TEMPLATE(BM_Cz, parallel::apply_cz)->Name("cz/parallel")->DenseRange(12, 20, 4);
BENCHMARK_TEMPLATE(BM_Norm, serial::norm_squared)->Name("norm/serial")->DenseRange(12, 20, 4);
BENCHMARK_TEMPLATE(BM_Norm, parallel::norm_squared)->Name("norm/parallel")->DenseRange(12, 20, 4);
BENCHMARK_TEMPLATE(BM_VerifyRules, serial::verify_rules)->Name("verify_rules/serial")->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_VerifyRules, parallel::verify_rules)->Name("verify_rules/parallel")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
