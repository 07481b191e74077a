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

#ifndef ASQDC_PROTOCOL_H
#define ASQDC_PROTOCOL_H

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "asqdc/bitstring.h"
#include "asqdc/keys.h"
#include "asqdc/qsim.h"
#include "asqdc/random.h"

namespace asqdc {

enum class Variant : uint8_t {
    /// Bob measures message qubits, reorders check qubits with k2, reflects them.
    Randomization,
    /// Bob measures-and-resends (SHARE) or reflects (CHECK) every qubit, per k1.
    MeasureResend,
};

std::string_view variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

enum class DetectionCause : uint8_t {
    None,
    HashMismatch,
    BellCheckFailed,
    ReflectFlag,
};

std::string_view cause_name(DetectionCause c);

/// Public facts about the channel that any party, including an adversary,
/// can observe.
struct ChannelInfo {
    Variant variant;
    size_t qubits;
};

using AttackParams = std::map<std::string, std::string>;

/// Tamper hooks on the forward (Alice to Bob) and backward (Bob to Alice)
/// qubit sequences. Strategies see the register, the sequences in flight and
/// ChannelInfo, nothing else.
class AttackStrategy {
   public:
    virtual ~AttackStrategy() = default;

    virtual std::string name() const = 0;
    virtual AttackParams params() const {
        return {};
    }
    virtual bool supports(Variant) const {
        return true;
    }

    /// Returns the sequence Bob receives, or nullopt when Bob is cut off.
    virtual std::optional<std::vector<QubitId>> tamper_forward(
        QuantumRegister &reg, const ChannelInfo &info, std::vector<QubitId> q) = 0;

    /// Receives Bob's outgoing sequence (empty when Bob was cut off) and
    /// returns what Alice receives.
    virtual std::vector<QubitId> tamper_backward(
        QuantumRegister &reg, const ChannelInfo &info, std::vector<QubitId> r) = 0;

    /// Idealized-model strategies may ask for the sequence an honest Bob
    /// would have reflected. Keyless strategies leave this false.
    virtual bool wants_honest_return() const {
        return false;
    }
    virtual void grant_honest_return(std::span<const QubitId>) {
    }
};

struct MessagePair {
    QubitId first;
    QubitId second;
    BellState initial;
};

struct CheckPair {
    /// qc1, kept by Alice.
    QubitId retained;
    /// qc2, sent as part of C_B.
    QubitId sent;
    BellState initial;
};

struct AliceSession {
    Variant variant = Variant::Randomization;
    KeyMaterial keys;
    BitString message;
    BitString block;
    std::vector<MessagePair> message_pairs;
    std::vector<CheckPair> check_pairs;
};

struct AlicePrepared {
    AliceSession session;
    std::vector<QubitId> transmitted;
};

enum class BobMode : uint8_t { Share, Check };

struct BobSession {
    Variant variant = Variant::Randomization;
    bool accepted = false;
    BitString received_block;
    BitString message;
    /// Z outcomes of the message qubits in pair order (MR_B').
    BitString measurements;
    /// Measure-resend only: mode chosen for each transmitted position.
    std::vector<BobMode> modes;
    /// Randomization: C_B' in received order. Measure-resend: Q'.
    std::vector<QubitId> outgoing;
};

struct AliceVerdict {
    bool accepted = false;
    DetectionCause cause = DetectionCause::None;
    size_t check_slots = 0;
    size_t check_slots_passed = 0;
    /// Measure-resend only: Bell outcomes of the returned message pairs.
    std::vector<BellState> message_pair_outcomes;
};

struct RunOutcome {
    /// False when an adversary cut Bob off from the forward channel.
    bool bob_received = true;
    bool bob_accepts = false;
    bool alice_accepts = false;
    std::optional<BitString> decoded_message;
    std::optional<BitString> received_block;
    DetectionCause detection_cause = DetectionCause::None;
    /// Bob accepted a message different from the one Alice sent.
    bool security_event = false;
    size_t check_slots = 0;
    size_t check_slots_passed = 0;
    std::vector<BellState> message_pair_outcomes;
};

/// Builds M = m || h(m), one Bell pair per bit of M, n/2 checking pairs with
/// uniformly random initial states, and interleaves the message qubits with
/// the transmitted checking halves under k1. `coins` drives the checking
/// states.
AlicePrepared alice_prepare(
    const BitString &m, const KeyMaterial &keys, QuantumRegister &reg, Variant variant, Rng &coins);

BobSession bob_randomization_step2(std::span<const QubitId> q, const KeyMaterial &keys, QuantumRegister &reg);
std::vector<QubitId> bob_randomization_step3(std::span<const QubitId> cb, const KeyMaterial &keys);
AliceVerdict alice_randomization_step4(
    std::span<const QubitId> returned, const AliceSession &session, QuantumRegister &reg);

BobSession bob_measure_resend_step23(std::span<const QubitId> q, const KeyMaterial &keys, QuantumRegister &reg);
AliceVerdict alice_measure_resend_step4(
    std::span<const QubitId> returned, const AliceSession &session, QuantumRegister &reg);

/// What an honest Bob would send back, in channel order.
std::vector<QubitId> honest_return(const AlicePrepared &prepared);

/// One full execution. The register and Alice's coins derive from `seed`;
/// the strategy carries its own randomness. Every verification step runs
/// even after an earlier one rejected; detection_cause names the first
/// failing step in protocol order.
RunOutcome run_session(
    Variant variant,
    const BitString &m,
    const KeyMaterial &keys,
    AttackStrategy &attack,
    uint64_t seed,
    size_t min_qubits = kMinQubits);

}  // namespace asqdc

#endif
