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

#include "asqdc/protocol.h"

#include <stdexcept>

#include "asqdc/codec.h"

namespace asqdc {

namespace {

void check_length(std::string_view where, size_t got, size_t want) {
    if (got != want) {
        throw std::invalid_argument(
            std::string(where) + ": expected " + std::to_string(want) + " qubits, got " + std::to_string(got));
    }
}

bool in_allowed_set(BellState outcome, uint8_t message_bit) {
    if (message_bit == 0) {
        return outcome == BellState::PhiPlus || outcome == BellState::PhiMinus;
    }
    return outcome == BellState::PsiPlus || outcome == BellState::PsiMinus;
}

}  // namespace

std::string_view variant_name(Variant v) {
    switch (v) {
        case Variant::Randomization:
            return "randomization";
        case Variant::MeasureResend:
            return "measure-resend";
    }
    return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
    if (name == "randomization") {
        return Variant::Randomization;
    }
    if (name == "measure-resend") {
        return Variant::MeasureResend;
    }
    return std::nullopt;
}

std::string_view cause_name(DetectionCause c) {
    switch (c) {
        case DetectionCause::None:
            return "none";
        case DetectionCause::HashMismatch:
            return "hash_mismatch";
        case DetectionCause::BellCheckFailed:
            return "bell_check_failed";
        case DetectionCause::ReflectFlag:
            return "reflect_flag";
    }
    return "?";
}

AlicePrepared alice_prepare(
    const BitString &m, const KeyMaterial &keys, QuantumRegister &reg, Variant variant, Rng &coins) {
    size_t n = keys.k1.size();
    if (m.size() * 8 != n) {
        throw ConfigError(
            "message has " + std::to_string(m.size()) + " bits; n=" + std::to_string(n) + " requires n/8");
    }
    validate_keys(keys, variant == Variant::Randomization);

    AlicePrepared out;
    AliceSession &s = out.session;
    s.variant = variant;
    s.keys = keys;
    s.message = m;
    s.block = build_block(m);

    std::vector<QubitId> message_qubits;
    message_qubits.reserve(n / 2);
    for (size_t i = 0; i < s.block.size(); i++) {
        BellState bs = encode_bit(s.block[i]);
        auto [a, b] = reg.prepare_bell(bs);
        s.message_pairs.push_back({a, b, bs});
        message_qubits.push_back(a);
        message_qubits.push_back(b);
    }

    std::vector<QubitId> check_qubits;
    check_qubits.reserve(n / 2);
    for (size_t j = 0; j < n / 2; j++) {
        BellState bs = uniform_bit(coins) ? BellState::PsiMinus : BellState::PhiPlus;
        auto [retained, sent] = reg.prepare_bell(bs);
        s.check_pairs.push_back({retained, sent, bs});
        check_qubits.push_back(sent);
    }

    out.transmitted = interleave<QubitId>(message_qubits, check_qubits, keys.k1);
    return out;
}

BobSession bob_randomization_step2(std::span<const QubitId> q, const KeyMaterial &keys, QuantumRegister &reg) {
    check_length("bob_randomization_step2", q.size(), keys.k1.size());
    auto [message_qubits, check_qubits] = deinterleave(q, keys.k1);

    BobSession bob;
    bob.variant = Variant::Randomization;
    for (QubitId qubit : message_qubits) {
        bob.measurements.push_back(reg.measure_z(qubit));
    }
    bob.received_block = decode_pairs(bob.measurements);
    auto check = verify_block(bob.received_block);
    bob.accepted = check.ok;
    bob.message = std::move(check.message);
    bob.outgoing = std::move(check_qubits);
    return bob;
}

std::vector<QubitId> bob_randomization_step3(std::span<const QubitId> cb, const KeyMaterial &keys) {
    if (!keys.k2.has_value()) {
        throw ConfigError("bob_randomization_step3: k2 is required");
    }
    check_length("bob_randomization_step3", cb.size(), keys.k2->size());
    return permutation_from_key(*keys.k2, keys.k2->size()).apply(cb);
}

AliceVerdict alice_randomization_step4(
    std::span<const QubitId> returned, const AliceSession &session, QuantumRegister &reg) {
    const auto &pairs = session.check_pairs;
    check_length("alice_randomization_step4", returned.size(), pairs.size());
    auto reordered = permutation_from_key(*session.keys.k2, pairs.size()).invert(returned);

    AliceVerdict verdict;
    verdict.check_slots = pairs.size();
    for (size_t j = 0; j < pairs.size(); j++) {
        if (reg.bell_measure(pairs[j].retained, reordered[j]) == pairs[j].initial) {
            verdict.check_slots_passed++;
        }
    }
    verdict.accepted = verdict.check_slots_passed == verdict.check_slots;
    verdict.cause = verdict.accepted ? DetectionCause::None : DetectionCause::BellCheckFailed;
    return verdict;
}

BobSession bob_measure_resend_step23(std::span<const QubitId> q, const KeyMaterial &keys, QuantumRegister &reg) {
    check_length("bob_measure_resend_step23", q.size(), keys.k1.size());
    if (keys.k1.weight() != keys.k1.size() / 2) {
        throw ConfigError("bob_measure_resend_step23: k1 is not balanced");
    }

    BobSession bob;
    bob.variant = Variant::MeasureResend;
    bob.outgoing.reserve(q.size());
    bob.modes.reserve(q.size());
    for (size_t i = 0; i < q.size(); i++) {
        if (keys.k1[i] == 0) {
            uint8_t b = reg.measure_z(q[i]);
            bob.measurements.push_back(b);
            bob.outgoing.push_back(reg.alloc_qubit(b));
            bob.modes.push_back(BobMode::Share);
        } else {
            bob.outgoing.push_back(q[i]);
            bob.modes.push_back(BobMode::Check);
        }
    }
    // SHARE positions arrive in message-pair order, so MR_B needs no reordering.
    bob.received_block = decode_pairs(bob.measurements);
    auto check = verify_block(bob.received_block);
    bob.accepted = check.ok;
    bob.message = std::move(check.message);
    return bob;
}

AliceVerdict alice_measure_resend_step4(
    std::span<const QubitId> returned, const AliceSession &session, QuantumRegister &reg) {
    check_length("alice_measure_resend_step4", returned.size(), session.keys.k1.size());
    auto [message_qubits, check_qubits] = deinterleave(returned, session.keys.k1);

    AliceVerdict verdict;
    const auto &pairs = session.check_pairs;
    verdict.check_slots = pairs.size();
    for (size_t j = 0; j < pairs.size(); j++) {
        if (reg.bell_measure(pairs[j].retained, check_qubits[j]) == pairs[j].initial) {
            verdict.check_slots_passed++;
        }
    }
    if (verdict.check_slots_passed != verdict.check_slots) {
        verdict.cause = DetectionCause::BellCheckFailed;
        return verdict;
    }

    bool all_initial = true;
    bool out_of_set = false;
    for (size_t i = 0; i < session.message_pairs.size(); i++) {
        BellState outcome = reg.bell_measure(message_qubits[2 * i], message_qubits[2 * i + 1]);
        verdict.message_pair_outcomes.push_back(outcome);
        all_initial = all_initial && outcome == session.message_pairs[i].initial;
        out_of_set = out_of_set || !in_allowed_set(outcome, session.block[i]);
    }
    if (out_of_set) {
        verdict.cause = DetectionCause::BellCheckFailed;
    } else if (all_initial) {
        verdict.cause = DetectionCause::ReflectFlag;
    } else {
        verdict.accepted = true;
    }
    return verdict;
}

std::vector<QubitId> honest_return(const AlicePrepared &prepared) {
    const AliceSession &s = prepared.session;
    if (s.variant == Variant::MeasureResend) {
        return prepared.transmitted;
    }
    std::vector<QubitId> sent;
    sent.reserve(s.check_pairs.size());
    for (const auto &c : s.check_pairs) {
        sent.push_back(c.sent);
    }
    return bob_randomization_step3(sent, s.keys);
}

RunOutcome run_session(
    Variant variant,
    const BitString &m,
    const KeyMaterial &keys,
    AttackStrategy &attack,
    uint64_t seed,
    size_t min_qubits) {
    validate_qubit_count(keys.k1.size(), min_qubits);
    if (!attack.supports(variant)) {
        throw ConfigError(
            "attack '" + attack.name() + "' does not apply to the " + std::string(variant_name(variant)) +
            " variant");
    }

    QuantumRegister reg(derive_seed(seed, 0));
    Rng coins(derive_seed(seed, 1));
    AlicePrepared prepared = alice_prepare(m, keys, reg, variant, coins);
    ChannelInfo info{variant, keys.k1.size()};

    RunOutcome out;
    std::vector<QubitId> backward;
    auto delivered = attack.tamper_forward(reg, info, prepared.transmitted);
    if (delivered.has_value()) {
        BobSession bob = variant == Variant::Randomization ? bob_randomization_step2(*delivered, keys, reg)
                                                           : bob_measure_resend_step23(*delivered, keys, reg);
        out.bob_accepts = bob.accepted;
        out.decoded_message = bob.message;
        out.received_block = bob.received_block;
        backward = variant == Variant::Randomization ? bob_randomization_step3(bob.outgoing, keys) : bob.outgoing;
    } else {
        out.bob_received = false;
    }

    if (attack.wants_honest_return()) {
        auto honest = honest_return(prepared);
        attack.grant_honest_return(honest);
    }
    auto returned = attack.tamper_backward(reg, info, std::move(backward));

    AliceVerdict verdict = variant == Variant::Randomization
                               ? alice_randomization_step4(returned, prepared.session, reg)
                               : alice_measure_resend_step4(returned, prepared.session, reg);
    out.alice_accepts = verdict.accepted;
    out.check_slots = verdict.check_slots;
    out.check_slots_passed = verdict.check_slots_passed;
    out.message_pair_outcomes = std::move(verdict.message_pair_outcomes);

    if (out.bob_received && !out.bob_accepts) {
        out.detection_cause = DetectionCause::HashMismatch;
    } else {
        out.detection_cause = verdict.cause;
    }
    out.security_event = out.bob_accepts && out.decoded_message != m;
    return out;
}

}  // namespace asqdc
