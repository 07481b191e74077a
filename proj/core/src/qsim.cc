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

#include "asqdc/qsim.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace asqdc {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

double norm_squared(std::span<const Amplitude> v) {
    double t = 0;
    for (const auto &a : v) {
        t += std::norm(a);
    }
    return t;
}

void scale(std::vector<Amplitude> &v, double factor) {
    for (auto &a : v) {
        a *= factor;
    }
}

size_t position_in(const std::vector<QubitId> &qubits, QubitId q) {
    auto it = std::find(qubits.begin(), qubits.end(), q);
    return static_cast<size_t>(it - qubits.begin());
}

std::string describe(QubitId q) {
    return "qubit #" + std::to_string(q.value);
}

}  // namespace

std::array<Amplitude, 4> bell_amplitudes(BellState bs) {
    switch (bs) {
        case BellState::PhiPlus:
            return {kInvSqrt2, 0, 0, kInvSqrt2};
        case BellState::PhiMinus:
            return {kInvSqrt2, 0, 0, -kInvSqrt2};
        case BellState::PsiPlus:
            return {0, kInvSqrt2, kInvSqrt2, 0};
        case BellState::PsiMinus:
            return {0, kInvSqrt2, -kInvSqrt2, 0};
    }
    throw std::invalid_argument("bell_amplitudes: bad BellState");
}

std::string_view bell_name(BellState bs) {
    switch (bs) {
        case BellState::PhiPlus:
            return "PhiPlus";
        case BellState::PhiMinus:
            return "PhiMinus";
        case BellState::PsiPlus:
            return "PsiPlus";
        case BellState::PsiMinus:
            return "PsiMinus";
    }
    return "?";
}

bool equal_up_to_global_phase(std::span<const Amplitude> a, std::span<const Amplitude> b, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    // Align phases on the largest amplitude of b.
    size_t k = 0;
    for (size_t i = 1; i < b.size(); i++) {
        if (std::abs(b[i]) > std::abs(b[k])) {
            k = i;
        }
    }
    Amplitude phase = 1;
    if (std::abs(b[k]) > tol && std::abs(a[k]) > tol) {
        phase = a[k] / b[k];
        phase /= std::abs(phase);
    }
    for (size_t i = 0; i < a.size(); i++) {
        if (std::abs(a[i] - phase * b[i]) > tol) {
            return false;
        }
    }
    return true;
}

QuantumRegister::QuantumRegister(uint64_t seed) : rng_(seed) {
}

uint32_t QuantumRegister::component_of(QubitId q) const {
    auto it = owner_.find(q.value);
    if (it == owner_.end()) {
        throw std::invalid_argument("QuantumRegister: unknown or released " + describe(q));
    }
    return it->second;
}

uint32_t QuantumRegister::add_component(Component c) {
    uint32_t key = next_component_++;
    for (QubitId q : c.qubits) {
        owner_[q.value] = key;
    }
    components_.emplace(key, std::move(c));
    return key;
}

void QuantumRegister::drop_component(uint32_t key) {
    components_.erase(key);
}

bool QuantumRegister::is_live(QubitId q) const {
    return owner_.contains(q.value);
}

QubitId QuantumRegister::alloc_qubit(uint8_t bit) {
    if (bit > 1) {
        throw std::invalid_argument("alloc_qubit: bit must be 0 or 1");
    }
    QubitId q{next_qubit_++};
    Component c;
    c.qubits = {q};
    c.amps = {bit ? 0.0 : 1.0, bit ? 1.0 : 0.0};
    add_component(std::move(c));
    return q;
}

std::pair<QubitId, QubitId> QuantumRegister::prepare_bell(BellState bs) {
    QubitId a{next_qubit_++};
    QubitId b{next_qubit_++};
    auto amps = bell_amplitudes(bs);
    Component c;
    c.qubits = {a, b};
    c.amps.assign(amps.begin(), amps.end());
    add_component(std::move(c));
    return {a, b};
}

std::array<double, 2> QuantumRegister::z_probabilities(QubitId q) const {
    const Component &c = components_.at(component_of(q));
    size_t shift = c.qubits.size() - 1 - position_in(c.qubits, q);
    double p[2] = {0, 0};
    for (size_t i = 0; i < c.amps.size(); i++) {
        p[(i >> shift) & 1] += std::norm(c.amps[i]);
    }
    double total = p[0] + p[1];
    return {p[0] / total, p[1] / total};
}

uint8_t QuantumRegister::measure_z(QubitId q) {
    uint32_t key = component_of(q);
    auto probs = z_probabilities(q);
    double u = uniform_unit(rng_);
    uint8_t outcome = u < probs[0] ? 0 : 1;
    if (probs[outcome] == 0) {
        outcome ^= 1;
    }

    Component &c = components_.at(key);
    size_t k = c.qubits.size();
    if (k == 1) {
        c.amps = {outcome ? 0.0 : 1.0, outcome ? 1.0 : 0.0};
        return outcome;
    }

    size_t pos = position_in(c.qubits, q);
    size_t shift = k - 1 - pos;
    Component rest;
    for (size_t i = 0; i < k; i++) {
        if (i != pos) {
            rest.qubits.push_back(c.qubits[i]);
        }
    }
    rest.amps.reserve(c.amps.size() / 2);
    size_t low_mask = (size_t{1} << shift) - 1;
    for (size_t j = 0; j < c.amps.size() / 2; j++) {
        size_t i = ((j & ~low_mask) << 1) | (size_t{outcome} << shift) | (j & low_mask);
        rest.amps.push_back(c.amps[i]);
    }
    scale(rest.amps, 1.0 / std::sqrt(norm_squared(rest.amps)));

    drop_component(key);
    Component single;
    single.qubits = {q};
    single.amps = {outcome ? 0.0 : 1.0, outcome ? 1.0 : 0.0};
    add_component(std::move(single));
    add_component(std::move(rest));
    return outcome;
}

uint8_t QuantumRegister::release(QubitId q) {
    uint8_t outcome = measure_z(q);
    drop_component(component_of(q));
    owner_.erase(q.value);
    return outcome;
}

QuantumRegister::Component QuantumRegister::joined_pair_view(QubitId qa, QubitId qb) const {
    if (qa == qb) {
        throw std::invalid_argument("bell_measure: both operands are " + describe(qa));
    }
    uint32_t ka = component_of(qa);
    uint32_t kb = component_of(qb);

    // Tensor product of the distinct components involved, ka's qubits high.
    Component joined = components_.at(ka);
    if (kb != ka) {
        const Component &other = components_.at(kb);
        std::vector<Amplitude> amps(joined.amps.size() * other.amps.size());
        for (size_t i = 0; i < joined.amps.size(); i++) {
            for (size_t j = 0; j < other.amps.size(); j++) {
                amps[i * other.amps.size() + j] = joined.amps[i] * other.amps[j];
            }
        }
        joined.amps = std::move(amps);
        joined.qubits.insert(joined.qubits.end(), other.qubits.begin(), other.qubits.end());
    }

    std::vector<QubitId> order = {qa, qb};
    std::vector<QubitId> spectators;
    for (QubitId q : joined.qubits) {
        if (q != qa && q != qb) {
            spectators.push_back(q);
        }
    }
    std::sort(spectators.begin(), spectators.end());
    order.insert(order.end(), spectators.begin(), spectators.end());

    size_t k = order.size();
    std::vector<size_t> shift_of_new(k);
    for (size_t i = 0; i < k; i++) {
        shift_of_new[i] = k - 1 - position_in(joined.qubits, order[i]);
    }
    Component out;
    out.qubits = order;
    out.amps.assign(joined.amps.size(), 0);
    for (size_t idx = 0; idx < out.amps.size(); idx++) {
        size_t old_idx = 0;
        for (size_t i = 0; i < k; i++) {
            if ((idx >> (k - 1 - i)) & 1) {
                old_idx |= size_t{1} << shift_of_new[i];
            }
        }
        out.amps[idx] = joined.amps[old_idx];
    }
    return out;
}

std::array<double, 4> QuantumRegister::bell_weights(
    const Component &c, std::array<std::vector<Amplitude>, 4> *projected) {
    size_t rest = c.amps.size() / 4;
    std::array<double, 4> weights{};
    for (BellState bs : kAllBellStates) {
        auto b = bell_amplitudes(bs);
        std::vector<Amplitude> v(rest, 0);
        for (size_t r = 0; r < rest; r++) {
            Amplitude t = 0;
            for (size_t ab = 0; ab < 4; ab++) {
                t += std::conj(b[ab]) * c.amps[ab * rest + r];
            }
            v[r] = t;
        }
        auto s = static_cast<size_t>(bs);
        weights[s] = norm_squared(v);
        if (projected != nullptr) {
            (*projected)[s] = std::move(v);
        }
    }
    double total = weights[0] + weights[1] + weights[2] + weights[3];
    for (auto &w : weights) {
        w /= total;
    }
    return weights;
}

std::array<double, 4> QuantumRegister::bell_probabilities(QubitId qa, QubitId qb) const {
    return bell_weights(joined_pair_view(qa, qb), nullptr);
}

BellState QuantumRegister::bell_measure(QubitId qa, QubitId qb) {
    Component joined = joined_pair_view(qa, qb);
    std::array<std::vector<Amplitude>, 4> projected;
    auto probs = bell_weights(joined, &projected);

    double u = uniform_unit(rng_);
    size_t pick = 4;
    double cumulative = 0;
    for (size_t i = 0; i < 4; i++) {
        cumulative += probs[i];
        if (u < cumulative && probs[i] > 0) {
            pick = i;
            break;
        }
    }
    if (pick == 4) {
        // Rounding left u above the final cumulative sum.
        for (size_t i = 4; i-- > 0;) {
            if (probs[i] > 0) {
                pick = i;
                break;
            }
        }
    }
    auto outcome = static_cast<BellState>(pick);

    uint32_t ka = component_of(qa);
    uint32_t kb = component_of(qb);
    drop_component(ka);
    if (kb != ka) {
        drop_component(kb);
    }

    Component pair;
    pair.qubits = {qa, qb};
    auto b = bell_amplitudes(outcome);
    pair.amps.assign(b.begin(), b.end());
    add_component(std::move(pair));

    if (joined.qubits.size() > 2) {
        Component spectators;
        spectators.qubits.assign(joined.qubits.begin() + 2, joined.qubits.end());
        spectators.amps = std::move(projected[pick]);
        scale(spectators.amps, 1.0 / std::sqrt(norm_squared(spectators.amps)));
        add_component(std::move(spectators));
    }
    return outcome;
}

void QuantumRegister::apply_pauli(QubitId q, Pauli op) {
    Component &c = components_.at(component_of(q));
    size_t shift = c.qubits.size() - 1 - position_in(c.qubits, q);
    size_t bit = size_t{1} << shift;
    for (size_t i = 0; i < c.amps.size(); i++) {
        if (i & bit) {
            continue;
        }
        Amplitude &zero = c.amps[i];
        Amplitude &one = c.amps[i | bit];
        switch (op) {
            case Pauli::X:
                std::swap(zero, one);
                break;
            case Pauli::Z:
                one = -one;
                break;
            case Pauli::IY: {
                Amplitude old_zero = zero;
                zero = one;
                one = -old_zero;
                break;
            }
        }
    }
}

ComponentSnapshot QuantumRegister::component_snapshot(QubitId q) const {
    const Component &c = components_.at(component_of(q));
    return {c.qubits, c.amps};
}

std::vector<ComponentSnapshot> QuantumRegister::components() const {
    std::vector<ComponentSnapshot> out;
    out.reserve(components_.size());
    for (const auto &[key, c] : components_) {
        out.push_back({c.qubits, c.amps});
    }
    std::sort(out.begin(), out.end(), [](const ComponentSnapshot &a, const ComponentSnapshot &b) {
        return *std::min_element(a.qubits.begin(), a.qubits.end()) <
               *std::min_element(b.qubits.begin(), b.qubits.end());
    });
    return out;
}

}  // namespace asqdc
