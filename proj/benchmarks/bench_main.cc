// Copyright 2026 The qbcap Authors
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

#include <vector>

#include "benchmark/benchmark.h"
#include "qbcap/battery_states.h"
#include "qbcap/capacity.h"
#include "qbcap/distribution.h"
#include "qbcap/gain_optimizer.h"
#include "qbcap/matops.h"
#include "qbcap/random.h"

using namespace qbcap;

static void BM_eig_hermitian(benchmark::State &state) {
    Rng rng(1);
    const auto dim = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix m = random_hermitian(rng, dim);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eig_hermitian(m));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_eig_hermitian)->RangeMultiplier(2)->Range(2, 64)->Complexity();

static void BM_partial_trace_single_qubit(benchmark::State &state) {
    Rng rng(2);
    const int n = static_cast<int>(state.range(0));
    const ComplexMatrix rho = to_dense(random_x_state(rng, n)).matrix();
    const int keep[1] = {1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(partial_trace(rho, n, keep));
    }
}
BENCHMARK(BM_partial_trace_single_qubit)->DenseRange(2, 8, 2);

static void BM_capacity_report_x_state(benchmark::State &state) {
    Rng rng(3);
    const int n = static_cast<int>(state.range(0));
    const XState x = random_x_state(rng, n);
    const BatteryHamiltonian h = random_hamiltonian(rng, n, 2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(capacity_report(x, h));
    }
}
BENCHMARK(BM_capacity_report_x_state)->DenseRange(2, 12, 2);

static void BM_capacity_report_dense(benchmark::State &state) {
    Rng rng(4);
    const int n = static_cast<int>(state.range(0));
    const XState x = random_x_state(rng, n);
    const DensityMatrix rho = to_dense(x);
    const BatteryHamiltonian h = random_hamiltonian(rng, n, 2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(capacity_report(rho, h));
    }
}
BENCHMARK(BM_capacity_report_dense)->DenseRange(2, 5);

static void BM_monogamy_audit(benchmark::State &state) {
    Rng rng(5);
    const int n = static_cast<int>(state.range(0));
    std::vector<std::pair<XState, BatteryHamiltonian>> inputs;
    for (int k = 0; k < 64; ++k) {
        inputs.emplace_back(random_x_state(rng, n), random_hamiltonian(rng, n, 2.0));
    }
    std::size_t k = 0;
    for (auto _ : state) {
        const auto &[x, h] = inputs[k++ % inputs.size()];
        benchmark::DoNotOptimize(monogamy_audit(x, h));
    }
}
BENCHMARK(BM_monogamy_audit)->DenseRange(2, 4);

static void BM_three_qubit_relations(benchmark::State &state) {
    Rng rng(6);
    const XState x = random_x_state(rng, 3);
    const BatteryHamiltonian h = random_hamiltonian(rng, 3, 2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(three_qubit_relations(x, h));
    }
}
BENCHMARK(BM_three_qubit_relations);

static void BM_critical_gamma(benchmark::State &state) {
    const XState rho = counterexample_state(1);
    const BatteryHamiltonian h({0.5, 0.3, 0.1}, 0.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(critical_gamma(rho, Relation::EX2_1, h, 2.0));
    }
}
BENCHMARK(BM_critical_gamma)->Unit(benchmark::kMillisecond);

static void BM_exhaustive_gain(benchmark::State &state) {
    Rng rng(7);
    const int n = static_cast<int>(state.range(0));
    const XState x = random_x_state(rng, n);
    const BatteryHamiltonian h = random_hamiltonian(rng, n, 2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize_gain(x, h, GainStrategy::Exhaustive));
    }
}
BENCHMARK(BM_exhaustive_gain)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

static void BM_permuted_marginal_sum(benchmark::State &state) {
    Rng rng(8);
    const int n = static_cast<int>(state.range(0));
    const XState x = random_x_state(rng, n);
    const BatteryHamiltonian h = random_hamiltonian(rng, n, 2.0);
    const Permutation pi = random_permutation(rng, x.dim());
    for (auto _ : state) {
        benchmark::DoNotOptimize(permuted_marginal_sum(x, h, pi));
    }
}
BENCHMARK(BM_permuted_marginal_sum)->DenseRange(2, 10, 2);
BENCHMARK_MAIN();
