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

#include "asqdc/codec.h"
#include "asqdc/harness.h"

namespace {

using namespace asqdc;

void BM_HashChecksum(benchmark::State &state) {
    const auto len = static_cast<size_t>(state.range(0));
    BitString m(len);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hash_checksum(m, len));
    }
}
BENCHMARK(BM_HashChecksum)->Arg(2)->Arg(16)->Arg(256);

void BM_PermutationFromKey(benchmark::State &state) {
    const auto len = static_cast<size_t>(state.range(0));
    BitString k(len);
    for (auto _ : state) {
        benchmark::DoNotOptimize(permutation_from_key(k, len));
    }
}
BENCHMARK(BM_PermutationFromKey)->Arg(8)->Arg(512);

void BM_Session(benchmark::State &state, Variant variant, const char *attack_name) {
    const auto n = static_cast<size_t>(state.range(0));
    Rng rng(1);
    auto keys = gen_keys(n, rng);
    BitString m(n / 8);
    uint64_t seed = 0;
    for (auto _ : state) {
        auto attack = make_attack({attack_name, {}}, Rng(seed));
        benchmark::DoNotOptimize(run_session(variant, m, keys, *attack, seed++));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK_CAPTURE(BM_Session, randomization_honest, Variant::Randomization, "no_attack")->Arg(16)->Arg(64)->Arg(256);
BENCHMARK_CAPTURE(BM_Session, randomization_intercept, Variant::Randomization, "intercept_resend")->Arg(16)->Arg(256);
BENCHMARK_CAPTURE(BM_Session, measure_resend_honest, Variant::MeasureResend, "no_attack")->Arg(16)->Arg(256);
BENCHMARK_CAPTURE(BM_Session, randomization_impersonate_bob, Variant::Randomization, "impersonate_bob")->Arg(16);

void BM_Experiment(benchmark::State &state) {
    ExperimentConfig c;
    c.attack.name = "intercept_resend";
    c.n = 16;
    c.trials = 1000;
    c.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_experiment(c));
    }
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_Experiment)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
