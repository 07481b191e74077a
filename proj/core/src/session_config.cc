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

#include "asqdc/session_config.h"

#include <charconv>
#include <map>
#include <sstream>

#include "json.hpp"

namespace asqdc {

namespace {

std::string_view trim(std::string_view s) {
    const char *ws = " \t\r";
    size_t b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    size_t e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

template <typename T>
T parse_unsigned(std::string_view key, std::string_view value) {
    T out{};
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw ConfigError(std::string(key) + ": expected an unsigned integer, got '" + std::string(value) + "'");
    }
    return out;
}

BitString parse_bits(std::string_view key, std::string_view value, size_t length) {
    try {
        return BitString::from_hex(value, length);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string(key) + ": " + e.what());
    }
}

}  // namespace

SessionConfig parse_session_config(std::string_view text) {
    std::map<std::string, std::string> values;
    size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        line_no++;
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        std::string key(trim(line.substr(0, eq)));
        std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) {
            throw ConfigError("line " + std::to_string(line_no) + ": empty key");
        }
        if (!values.emplace(key, value).second) {
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        }
    }

    auto require = [&](const std::string &key) -> const std::string & {
        auto it = values.find(key);
        if (it == values.end()) {
            throw ConfigError("missing required key '" + key + "'");
        }
        return it->second;
    };

    SessionConfig c;
    auto variant = parse_variant(require("variant"));
    if (!variant) {
        throw ConfigError("variant: expected randomization or measure-resend");
    }
    c.variant = *variant;
    c.n = parse_unsigned<size_t>("n", require("n"));
    validate_qubit_count(c.n);
    c.message = parse_bits("message", require("message"), c.n / 8);
    c.keys.k1 = parse_bits("k1", require("k1"), c.n);
    if (values.contains("k2")) {
        c.keys.k2 = parse_bits("k2", values.at("k2"), c.n / 2);
    }
    validate_keys(c.keys, c.variant == Variant::Randomization);
    if (values.contains("seed")) {
        c.seed = parse_unsigned<uint64_t>("seed", values.at("seed"));
    }
    if (values.contains("attack")) {
        c.attack.name = values.at("attack");
    }

    for (const auto &[key, value] : values) {
        if (key.starts_with("attack.")) {
            c.attack.params[key.substr(7)] = value;
        } else if (key != "variant" && key != "n" && key != "message" && key != "k1" && key != "k2" &&
                   key != "seed" && key != "attack") {
            throw ConfigError("unknown key '" + key + "'");
        }
    }
    validate_attack(c.attack, c.variant, c.n);
    return c;
}

std::string format_session_config(const SessionConfig &c) {
    std::ostringstream out;
    out << "variant = " << variant_name(c.variant) << "\n";
    out << "n = " << c.n << "\n";
    out << "message = " << c.message.to_hex() << "\n";
    out << "k1 = " << c.keys.k1.to_hex() << "\n";
    if (c.keys.k2.has_value()) {
        out << "k2 = " << c.keys.k2->to_hex() << "\n";
    }
    out << "seed = " << c.seed << "\n";
    out << "attack = " << c.attack.name << "\n";
    for (const auto &[key, value] : c.attack.params) {
        out << "attack." << key << " = " << value << "\n";
    }
    return out.str();
}

RunOutcome run_configured_session(const SessionConfig &config) {
    validate_attack(config.attack, config.variant, config.n);
    auto attack = make_attack(config.attack, Rng(derive_seed(config.seed, 2)));
    return run_session(config.variant, config.message, config.keys, *attack, derive_seed(config.seed, 1));
}

std::string transcript_json(const SessionConfig &config, const RunOutcome &o) {
    using nlohmann::json;
    json j;
    j["config"] = {
        {"variant", variant_name(config.variant)},
        {"n", config.n},
        {"message", config.message.to_hex()},
        {"k1", config.keys.k1.to_hex()},
        {"k2", config.keys.k2.has_value() ? json(config.keys.k2->to_hex()) : json(nullptr)},
        {"seed", config.seed},
        {"attack", {{"name", config.attack.name}, {"params", config.attack.params}}},
    };
    j["bob_received"] = o.bob_received;
    j["bob_accepts"] = o.bob_accepts;
    j["alice_accepts"] = o.alice_accepts;
    j["decoded_message"] = o.decoded_message.has_value() ? json(o.decoded_message->to_hex()) : json(nullptr);
    j["received_block"] = o.received_block.has_value() ? json(o.received_block->to_binary()) : json(nullptr);
    j["detection_cause"] = cause_name(o.detection_cause);
    j["security_event"] = o.security_event;
    j["check_slots"] = o.check_slots;
    j["check_slots_passed"] = o.check_slots_passed;
    json outcomes = json::array();
    for (BellState b : o.message_pair_outcomes) {
        outcomes.push_back(bell_name(b));
    }
    j["message_pair_outcomes"] = outcomes;
    return j.dump(2) + "\n";
}

}  // namespace asqdc
