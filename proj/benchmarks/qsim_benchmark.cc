// Copyright 2026 The asqdc-sim Authors
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

#include <benchmark/benchmark.h>

#include "asqdc/qsim.h"

namespace {

using asqdc::BellState;
using asqdc::QuantumRegister;

void BM_PrepareAndMeasureZ(benchmark::State &state) {
    QuantumRegister reg(1);
    for (auto _ : state) {
        auto [a, b] = reg.prepare_bell(BellState::PhiPlus);
        benchmark::DoNotOptimize(reg.measure_z(a));
        benchmark::DoNotOptimize(reg.measure_z(b));
        reg.release(a);
        reg.release(b);
    }
}
BENCHMARK(BM_PrepareAndMeasureZ);

void BM_BellMeasureSamePair(benchmark::State &state) {
    QuantumRegister reg(2);
    for (auto _ : state) {
        auto [a, b] = reg.prepare_bell(BellState::PsiMinus);
        benchmark::DoNotOptimize(reg.bell_measure(a, b));
        reg.release(a);
        reg.release(b);
    }
}
BENCHMARK(BM_BellMeasureSamePair);

// Merges two components into four qubits before projecting.
void BM_BellMeasureAcrossPairs(benchmark::State &state) {
    QuantumRegister reg(3);
    for (auto _ : state) {
        auto [a, b] = reg.prepare_bell(BellState::PhiPlus);
        auto [c, d] = reg.prepare_bell(BellState::PsiMinus);
        benchmark::DoNotOptimize(reg.bell_measure(a, c));
        for (auto q : {a, b, c, d}) {
            reg.release(q);
        }
    }
}
BENCHMARK(BM_BellMeasureAcrossPairs);

void BM_ManyLiveQubits(benchmark::State &state) {
    const auto pairs = static_cast<size_t>(state.range(0));
    for (auto _ : state) {
        QuantumRegister reg(4);
        std::vector<asqdc::QubitId> ids;
        for (size_t i = 0; i < pairs; i++) {
            auto [a, b] = reg.prepare_bell(BellState::PhiPlus);
            ids.push_back(a);
            ids.push_back(b);
        }
        for (auto q : ids) {
            benchmark::DoNotOptimize(reg.measure_z(q));
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(pairs));
}
BENCHMARK(BM_ManyLiveQubits)->Arg(8)->Arg(64)->Arg(1024);

}  // namespace
