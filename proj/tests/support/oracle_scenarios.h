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

#ifndef ASQDC_TESTS_ORACLE_SCENARIOS_H
#define ASQDC_TESTS_ORACLE_SCENARIOS_H

// Random operation scripts replayed on the component engine and on the dense
// oracle with the same measurement seed.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "asqdc/qsim.h"
#include "asqdc/random.h"
#include "support/dense_oracle.h"

namespace asqdc::testing {

struct ScenarioReport {
    size_t steps = 0;
    size_t measurements = 0;
    double max_probability_error = 0;
    size_t outcome_mismatches = 0;
    bool final_state_matches = true;
    std::string first_failure;

    bool ok(double tol = 1e-9) const {
        return max_probability_error <= tol && outcome_mismatches == 0 && final_state_matches;
    }
};

/// Builds and replays one script of at most `max_ops` operations over at
/// most `max_qubits` qubits. The script generator and the measurement
/// stream use independent seeds.
inline ScenarioReport run_oracle_scenario(uint64_t script_seed, uint64_t measure_seed, size_t max_qubits = 8,
                                          size_t max_ops = 20) {
    Rng script(script_seed);
    QuantumRegister engine(measure_seed);
    DenseOracle oracle(measure_seed);
    std::vector<QubitId> ids;
    ScenarioReport report;

    auto note = [&](double err, const std::string &what) {
        report.max_probability_error = std::max(report.max_probability_error, err);
        if (err > 1e-9 && report.first_failure.empty()) {
            report.first_failure = what;
        }
    };

    size_t ops = 1 + uniform_below(script, max_ops);
    for (size_t step = 0; step < ops; step++) {
        size_t n = ids.size();
        uint64_t kind = uniform_below(script, 5);
        if (n == 0) {
            kind = uniform_below(script, 2);
        }
        if (kind == 1 && n + 2 > max_qubits) {
            kind = 0;
        }
        if (kind == 0 && n + 1 > max_qubits) {
            kind = 2;
        }
        if (kind == 3 && n < 2) {
            kind = 2;
        }
        report.steps++;
        switch (kind) {
            case 0: {
                auto bit = uniform_bit(script);
                ids.push_back(engine.alloc_qubit(bit));
                oracle.alloc(bit);
                break;
            }
            case 1: {
                auto bs = kAllBellStates[uniform_below(script, 4)];
                auto [a, b] = engine.prepare_bell(bs);
                ids.push_back(a);
                ids.push_back(b);
                oracle.prepare_bell(bs);
                break;
            }
            case 2: {
                size_t q = uniform_below(script, n);
                auto pe = engine.z_probabilities(ids[q]);
                auto po = oracle.z_probabilities(ids[q].value);
                note(std::max(std::fabs(pe[0] - po[0]), std::fabs(pe[1] - po[1])),
                     "z probabilities at step " + std::to_string(step));
                auto re = engine.measure_z(ids[q]);
                auto ro = oracle.measure_z(ids[q].value);
                report.measurements++;
                report.outcome_mismatches += re != ro;
                break;
            }
            case 3: {
                size_t i = uniform_below(script, n);
                size_t j = uniform_below(script, n - 1);
                j += j >= i;
                auto pe = engine.bell_probabilities(ids[i], ids[j]);
                auto po = oracle.bell_probabilities(ids[i].value, ids[j].value);
                double err = 0;
                for (size_t k = 0; k < 4; k++) {
                    err = std::max(err, std::fabs(pe[k] - po[k]));
                }
                note(err, "bell probabilities at step " + std::to_string(step));
                auto re = engine.bell_measure(ids[i], ids[j]);
                auto ro = oracle.bell_measure(ids[i].value, ids[j].value);
                report.measurements++;
                report.outcome_mismatches += re != ro;
                break;
            }
            default: {
                size_t q = uniform_below(script, n);
                Pauli op = std::array{Pauli::X, Pauli::Z, Pauli::IY}[uniform_below(script, 3)];
                engine.apply_pauli(ids[q], op);
                oracle.apply(ids[q].value, op);
                break;
            }
        }
        if (report.outcome_mismatches != 0 && report.first_failure.empty()) {
            report.first_failure = "outcome mismatch at step " + std::to_string(step);
        }
    }

    auto dense = dense_from_engine(engine, oracle.num_qubits());
    report.final_state_matches = equal_up_to_global_phase(dense, oracle.state());
    if (!report.final_state_matches && report.first_failure.empty()) {
        report.first_failure = "final state differs";
    }
    return report;
}

}  // namespace asqdc::testing

#endif
