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

#ifndef ASQDC_QSIM_H
#define ASQDC_QSIM_H

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "asqdc/random.h"

namespace asqdc {

using Amplitude = std::complex<double>;

struct QubitId {
    uint32_t value = 0;

    auto operator<=>(const QubitId &) const = default;
};

/// Bell basis with the convention Phi+- = (|00> +- |11>)/sqrt2 and
/// Psi+- = (|01> +- |10>)/sqrt2. The enumeration order is also the order in
/// which Bell measurement outcomes are sampled.
enum class BellState : uint8_t {
    PhiPlus = 0,
    PhiMinus = 1,
    PsiPlus = 2,
    PsiMinus = 3,
};

inline constexpr std::array<BellState, 4> kAllBellStates = {
    BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus, BellState::PsiMinus};

/// Amplitudes over |00>, |01>, |10>, |11> (first qubit is the high bit).
std::array<Amplitude, 4> bell_amplitudes(BellState bs);
std::string_view bell_name(BellState bs);

enum class Pauli : uint8_t {
    X,
    Z,
    /// i*sigma_y: |0> -> -|1>, |1> -> |0>.
    IY,
};

struct ComponentSnapshot {
    /// qubits[0] is the most significant bit of the amplitude index.
    std::vector<QubitId> qubits;
    std::vector<Amplitude> amplitudes;
};

/// True when a == e^{i phi} b for some phi, within `tol` per amplitude.
bool equal_up_to_global_phase(std::span<const Amplitude> a, std::span<const Amplitude> b, double tol = 1e-9);

/// Exact state-vector simulator that keeps each group of entangled qubits in
/// its own component. Components merge only when a Bell measurement spans
/// two of them, and split again when a measurement disentangles qubits.
///
/// Every measurement draws exactly one value from `uniform_unit` on the
/// register's engine and selects the outcome by inverse CDF, in the order
/// 0,1 for Z measurements and kAllBellStates order for Bell measurements.
///
/// Not thread safe; use one register per trial.
class QuantumRegister {
   public:
    explicit QuantumRegister(uint64_t seed);

    QubitId alloc_qubit(uint8_t bit);
    std::pair<QubitId, QubitId> prepare_bell(BellState bs);

    uint8_t measure_z(QubitId q);
    BellState bell_measure(QubitId qa, QubitId qb);
    void apply_pauli(QubitId q, Pauli op);

    /// Measures q in the Z basis and removes it from the register.
    uint8_t release(QubitId q);

    /// Outcome probabilities {P(0), P(1)} without disturbing the state.
    std::array<double, 2> z_probabilities(QubitId q) const;
    /// Outcome probabilities in kAllBellStates order without disturbing the state.
    std::array<double, 4> bell_probabilities(QubitId qa, QubitId qb) const;

    ComponentSnapshot component_snapshot(QubitId q) const;
    /// All components, ordered by their smallest qubit id.
    std::vector<ComponentSnapshot> components() const;

    bool is_live(QubitId q) const;
    size_t num_live_qubits() const {
        return owner_.size();
    }
    size_t num_components() const {
        return components_.size();
    }

   private:
    struct Component {
        std::vector<QubitId> qubits;
        std::vector<Amplitude> amps;
    };

    uint32_t component_of(QubitId q) const;
    uint32_t add_component(Component c);
    void drop_component(uint32_t key);
    /// Tensor product of the components holding qa and qb, reordered to
    /// (qa, qb, spectators ascending by id). Does not modify the register.
    Component joined_pair_view(QubitId qa, QubitId qb) const;
    static std::array<double, 4> bell_weights(const Component &c, std::array<std::vector<Amplitude>, 4> *projected);

    std::unordered_map<uint32_t, uint32_t> owner_;
    std::map<uint32_t, Component> components_;
    uint32_t next_qubit_ = 0;
    uint32_t next_component_ = 0;
    Rng rng_;
};

}  // namespace asqdc

#endif
