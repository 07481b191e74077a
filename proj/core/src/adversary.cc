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

#include "asqdc/adversary.h"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

#include "asqdc/codec.h"

namespace asqdc {

std::string_view model_name(ImpersonationModel m) {
    return m == ImpersonationModel::PaperModel ? "paper_model" : "concrete";
}

std::optional<std::vector<QubitId>> ImpersonateAlice::tamper_forward(
    QuantumRegister &reg, const ChannelInfo &info, std::vector<QubitId>) {
    size_t n = info.qubits;
    BitString message(n / 8);
    for (size_t i = 0; i < message.size(); i++) {
        message.set(i, uniform_bit(rng_));
    }
    BitString block = build_block(message);

    std::vector<QubitId> message_qubits;
    for (size_t i = 0; i < block.size(); i++) {
        auto [a, b] = reg.prepare_bell(encode_bit(block[i]));
        message_qubits.push_back(a);
        message_qubits.push_back(b);
    }
    std::vector<QubitId> check_qubits;
    kept_.clear();
    for (size_t j = 0; j < n / 2; j++) {
        auto [kept, sent] = reg.prepare_bell(uniform_bit(rng_) ? BellState::PsiMinus : BellState::PhiPlus);
        kept_.push_back(kept);
        check_qubits.push_back(sent);
    }
    forged_ = interleave<QubitId>(message_qubits, check_qubits, random_balanced(n, rng_));
    return forged_;
}

std::optional<std::vector<QubitId>> ImpersonateBob::tamper_forward(
    QuantumRegister &, const ChannelInfo &, std::vector<QubitId> q) {
    intercepted_ = std::move(q);
    return std::nullopt;
}

std::vector<QubitId> ImpersonateBob::tamper_backward(
    QuantumRegister &, const ChannelInfo &info, std::vector<QubitId>) {
    if (model_ == ImpersonationModel::Concrete) {
        std::vector<QubitId> shuffled = intercepted_;
        fisher_yates(shuffled.begin(), shuffled.end(), rng_);
        if (info.variant == Variant::Randomization) {
            shuffled.resize(info.qubits / 2);
        }
        return shuffled;
    }

    if (honest_.empty()) {
        throw std::logic_error("impersonate_bob(paper_model): honest return order was not granted");
    }
    std::set<QubitId> honest_set(honest_.begin(), honest_.end());
    std::vector<QubitId> wrong;
    for (QubitId q : intercepted_) {
        if (!honest_set.contains(q)) {
            wrong.push_back(q);
        }
    }
    fisher_yates(wrong.begin(), wrong.end(), rng_);

    std::vector<QubitId> out;
    out.reserve(honest_.size());
    slot_correct_.assign(honest_.size(), false);
    size_t next_wrong = 0;
    for (size_t p = 0; p < honest_.size(); p++) {
        if (uniform_bit(rng_)) {
            out.push_back(honest_[p]);
            slot_correct_[p] = true;
        } else {
            out.push_back(wrong.at(next_wrong++));
        }
    }
    return out;
}

std::optional<std::vector<QubitId>> InterceptResend::tamper_forward(
    QuantumRegister &reg, const ChannelInfo &, std::vector<QubitId> q) {
    measured_ = BitString();
    std::vector<QubitId> resent;
    resent.reserve(q.size());
    for (QubitId qubit : q) {
        uint8_t b = reg.measure_z(qubit);
        measured_.push_back(b);
        resent.push_back(reg.alloc_qubit(b));
    }
    return resent;
}

BitString InterceptResend::guess_split() {
    return random_balanced(measured_.size(), rng_);
}

std::optional<std::vector<QubitId>> ModifySingle::tamper_forward(
    QuantumRegister &reg, const ChannelInfo &, std::vector<QubitId> q) {
    size_t idx = target_.has_value() ? *target_ : static_cast<size_t>(uniform_below(rng_, q.size()));
    if (idx >= q.size()) {
        throw std::out_of_range(
            "modify_single: target " + std::to_string(idx) + " outside a sequence of " + std::to_string(q.size()));
    }
    reg.apply_pauli(q[idx], Pauli::IY);
    last_target_ = idx;
    return q;
}

const std::vector<AttackInfo> &list_attacks() {
    static const std::vector<AttackInfo> kAttacks = {
        {"no_attack", "honest channel", ""},
        {"impersonate_alice", "Eve sends her own forged sequence to Bob", ""},
        {"impersonate_bob",
         "Eve intercepts Q and answers Alice in Bob's place",
         "mode=paper_model|concrete (default paper_model)"},
        {"intercept_resend", "Eve Z-measures Q and forwards fresh qubits in the observed states", ""},
        {"modify_single", "Eve applies i*sigma_y to one transmitted qubit", "target=<index>|random (default random)"},
        {"reflect_all", "Eve bypasses Bob and returns Q untouched (measure-resend only)", ""},
    };
    return kAttacks;
}

namespace {

void reject_unknown_params(const AttackSpec &spec, std::initializer_list<std::string_view> allowed) {
    for (const auto &[key, value] : spec.params) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw ConfigError("attack '" + spec.name + "' has no parameter '" + key + "'");
        }
    }
}

std::string param_or(const AttackSpec &spec, const std::string &key, const std::string &fallback) {
    auto it = spec.params.find(key);
    return it == spec.params.end() ? fallback : it->second;
}

ImpersonationModel parse_model(const AttackSpec &spec) {
    std::string mode = param_or(spec, "mode", "paper_model");
    if (mode == "paper_model") {
        return ImpersonationModel::PaperModel;
    }
    if (mode == "concrete") {
        return ImpersonationModel::Concrete;
    }
    throw ConfigError("impersonate_bob: mode must be paper_model or concrete, got '" + mode + "'");
}

std::optional<size_t> parse_target(const AttackSpec &spec) {
    std::string target = param_or(spec, "target", "random");
    if (target == "random") {
        return std::nullopt;
    }
    size_t value = 0;
    auto [ptr, ec] = std::from_chars(target.data(), target.data() + target.size(), value);
    if (ec != std::errc() || ptr != target.data() + target.size()) {
        throw ConfigError("modify_single: target must be an index or 'random', got '" + target + "'");
    }
    return value;
}

}  // namespace

void validate_attack(const AttackSpec &spec, Variant variant, size_t n) {
    if (spec.name == "no_attack" || spec.name == "impersonate_alice" || spec.name == "intercept_resend") {
        reject_unknown_params(spec, {});
    } else if (spec.name == "reflect_all") {
        reject_unknown_params(spec, {});
        if (variant != Variant::MeasureResend) {
            throw ConfigError("reflect_all applies to the measure-resend variant only");
        }
    } else if (spec.name == "impersonate_bob") {
        reject_unknown_params(spec, {"mode"});
        if (parse_model(spec) == ImpersonationModel::PaperModel && variant != Variant::Randomization) {
            throw ConfigError("impersonate_bob(paper_model) applies to the randomization variant only");
        }
    } else if (spec.name == "modify_single") {
        reject_unknown_params(spec, {"target"});
        auto target = parse_target(spec);
        if (target.has_value() && *target >= n) {
            throw ConfigError(
                "modify_single: target " + std::to_string(*target) + " must be below n=" + std::to_string(n));
        }
    } else {
        throw ConfigError("unknown attack '" + spec.name + "'");
    }
}

std::unique_ptr<AttackStrategy> make_attack(const AttackSpec &spec, Rng rng) {
    if (spec.name == "no_attack") {
        return std::make_unique<NoAttack>();
    }
    if (spec.name == "impersonate_alice") {
        return std::make_unique<ImpersonateAlice>(rng);
    }
    if (spec.name == "impersonate_bob") {
        return std::make_unique<ImpersonateBob>(parse_model(spec), rng);
    }
    if (spec.name == "intercept_resend") {
        return std::make_unique<InterceptResend>(rng);
    }
    if (spec.name == "modify_single") {
        return std::make_unique<ModifySingle>(parse_target(spec), rng);
    }
    if (spec.name == "reflect_all") {
        return std::make_unique<ReflectAll>();
    }
    throw ConfigError("unknown attack '" + spec.name + "'");
}

}  // namespace asqdc
