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

#ifndef ASQDC_ADVERSARY_H
#define ASQDC_ADVERSARY_H

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asqdc/protocol.h"

namespace asqdc {

class NoAttack final : public AttackStrategy {
   public:
    std::string name() const override {
        return "no_attack";
    }
    std::optional<std::vector<QubitId>> tamper_forward(
        QuantumRegister &, const ChannelInfo &, std::vector<QubitId> q) override {
        return q;
    }
    std::vector<QubitId> tamper_backward(QuantumRegister &, const ChannelInfo &, std::vector<QubitId> r) override {
        return r;
    }
};

/// Eve replaces Q with her own sequence: a checksummed block of a message of
/// her choosing plus random checking pairs, interleaved under a random
/// balanced string in place of k1.
class ImpersonateAlice final : public AttackStrategy {
   public:
    explicit ImpersonateAlice(Rng rng) : rng_(rng) {
    }

    std::string name() const override {
        return "impersonate_alice";
    }
    std::optional<std::vector<QubitId>> tamper_forward(
        QuantumRegister &reg, const ChannelInfo &info, std::vector<QubitId> q) override;
    std::vector<QubitId> tamper_backward(QuantumRegister &, const ChannelInfo &, std::vector<QubitId> r) override {
        return r;
    }

    const std::vector<QubitId> &forged() const {
        return forged_;
    }

   private:
    Rng rng_;
    std::vector<QubitId> forged_;
    std::vector<QubitId> kept_;
};

enum class ImpersonationModel : uint8_t {
    /// Each reflected slot holds the true partner with probability 1/2 and
    /// an unrelated intercepted qubit otherwise.
    PaperModel,
    /// A uniformly random subset of Q in uniformly random order.
    Concrete,
};

std::string_view model_name(ImpersonationModel m);

/// Eve intercepts Q, keeps Bob out of the exchange and answers Alice herself.
///
/// PaperModel needs to know which returned slot Alice will pair with which
/// retained qubit, which no keyless adversary has. It therefore requests the
/// honest return order through AttackStrategy::grant_honest_return and is
/// only defined for the randomization variant. Wrong slots are filled, without
/// repetition, from intercepted qubits outside the honest return so that
/// every wrong slot pairs Alice's qubit with an independent Bell half.
class ImpersonateBob final : public AttackStrategy {
   public:
    ImpersonateBob(ImpersonationModel model, Rng rng) : model_(model), rng_(rng) {
    }

    std::string name() const override {
        return "impersonate_bob";
    }
    AttackParams params() const override {
        return {{"mode", std::string(model_name(model_))}};
    }
    bool supports(Variant v) const override {
        return model_ == ImpersonationModel::Concrete || v == Variant::Randomization;
    }
    bool wants_honest_return() const override {
        return model_ == ImpersonationModel::PaperModel;
    }
    void grant_honest_return(std::span<const QubitId> honest) override {
        honest_.assign(honest.begin(), honest.end());
    }

    std::optional<std::vector<QubitId>> tamper_forward(
        QuantumRegister &reg, const ChannelInfo &info, std::vector<QubitId> q) override;
    std::vector<QubitId> tamper_backward(
        QuantumRegister &reg, const ChannelInfo &info, std::vector<QubitId> r) override;

    /// PaperModel only: which returned slots carried the true partner.
    const std::vector<bool> &slot_correct() const {
        return slot_correct_;
    }

   private:
    ImpersonationModel model_;
    Rng rng_;
    std::vector<QubitId> intercepted_;
    std::vector<QubitId> honest_;
    std::vector<bool> slot_correct_;
};

/// Eve measures every qubit of Q in the Z basis and forwards fresh qubits in
/// the observed states.
class InterceptResend final : public AttackStrategy {
   public:
    explicit InterceptResend(Rng rng) : rng_(rng) {
    }

    std::string name() const override {
        return "intercept_resend";
    }
    std::optional<std::vector<QubitId>> tamper_forward(
        QuantumRegister &reg, const ChannelInfo &info, std::vector<QubitId> q) override;
    std::vector<QubitId> tamper_backward(QuantumRegister &, const ChannelInfo &, std::vector<QubitId> r) override {
        return r;
    }

    const BitString &measured() const {
        return measured_;
    }
    /// Eve's guess of k1 after the attack. Her Z outcomes are uniformly
    /// random on every position, so she can do no better than a uniform
    /// balanced guess.
    BitString guess_split();

   private:
    Rng rng_;
    BitString measured_;
};

/// Applies i*sigma_y to one qubit of Q.
class ModifySingle final : public AttackStrategy {
   public:
    /// An empty target picks a uniformly random position per session.
    ModifySingle(std::optional<size_t> target, Rng rng) : target_(target), rng_(rng) {
    }

    std::string name() const override {
        return "modify_single";
    }
    AttackParams params() const override {
        return {{"target", target_.has_value() ? std::to_string(*target_) : std::string("random")}};
    }
    std::optional<std::vector<QubitId>> tamper_forward(
        QuantumRegister &reg, const ChannelInfo &info, std::vector<QubitId> q) override;
    std::vector<QubitId> tamper_backward(QuantumRegister &, const ChannelInfo &, std::vector<QubitId> r) override {
        return r;
    }

    std::optional<size_t> last_target() const {
        return last_target_;
    }

   private:
    std::optional<size_t> target_;
    Rng rng_;
    std::optional<size_t> last_target_;
};

/// Eve keeps Bob out and returns Q untouched, in transmitted order.
class ReflectAll final : public AttackStrategy {
   public:
    std::string name() const override {
        return "reflect_all";
    }
    bool supports(Variant v) const override {
        return v == Variant::MeasureResend;
    }
    std::optional<std::vector<QubitId>> tamper_forward(
        QuantumRegister &, const ChannelInfo &, std::vector<QubitId> q) override {
        held_ = std::move(q);
        return std::nullopt;
    }
    std::vector<QubitId> tamper_backward(QuantumRegister &, const ChannelInfo &, std::vector<QubitId>) override {
        return held_;
    }

   private:
    std::vector<QubitId> held_;
};

/// Name plus string parameters, as given on the command line.
struct AttackSpec {
    std::string name = "no_attack";
    AttackParams params;

    bool operator==(const AttackSpec &) const = default;
};

struct AttackInfo {
    std::string_view name;
    std::string_view summary;
    std::string_view params;
};

const std::vector<AttackInfo> &list_attacks();

/// Throws ConfigError for unknown names, unknown or malformed parameters, a
/// variant the attack does not apply to, or a target outside [0, n).
void validate_attack(const AttackSpec &spec, Variant variant, size_t n);

std::unique_ptr<AttackStrategy> make_attack(const AttackSpec &spec, Rng rng);

}  // namespace asqdc

#endif
