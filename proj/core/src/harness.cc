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

#include "asqdc/harness.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include "asqdc/codec.h"
#include "json.hpp"

namespace asqdc {

namespace {

using nlohmann::json;

constexpr uint64_t kKeyStream = UINT64_MAX;

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string params_string(const AttackParams &params) {
    std::string out;
    for (const auto &[k, v] : params) {
        if (!out.empty()) {
            out += ';';
        }
        out += k + "=" + v;
    }
    return out;
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

double rate(uint64_t count, uint64_t trials) {
    return trials == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(trials);
}

}  // namespace

std::string_view format_name(ReportFormat f) {
    return f == ReportFormat::Json ? "json" : "csv";
}

std::optional<ReportFormat> parse_format(std::string_view name) {
    if (name == "json") {
        return ReportFormat::Json;
    }
    if (name == "csv") {
        return ReportFormat::Csv;
    }
    return std::nullopt;
}

void validate_config(const ExperimentConfig &config) {
    validate_qubit_count(config.n, config.min_qubits);
    if (config.trials < 1) {
        throw ConfigError("trials must be at least 1");
    }
    validate_attack(config.attack, config.variant, config.n);
    if (config.message_hex.has_value()) {
        try {
            BitString::from_hex(*config.message_hex, config.n / 8);
        } catch (const std::invalid_argument &e) {
            throw ConfigError(std::string("message: ") + e.what());
        }
    }
}

KeyMaterial experiment_keys(const ExperimentConfig &config) {
    Rng rng(derive_seed(config.seed, kKeyStream));
    return gen_keys(config.n, rng, config.variant == Variant::Randomization, config.min_qubits);
}

WilsonInterval wilson_interval(uint64_t successes, uint64_t trials, double z) {
    if (trials == 0) {
        return {0.0, 1.0};
    }
    double nn = static_cast<double>(trials);
    double p = static_cast<double>(successes) / nn;
    double z2 = z * z;
    double denom = 1.0 + z2 / nn;
    double centre = (p + z2 / (2.0 * nn)) / denom;
    double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
    // Clamp so the interval always contains p despite rounding at 0 and 1.
    return {std::min(p, std::max(0.0, centre - half)), std::max(p, std::min(1.0, centre + half))};
}

std::optional<AnalyticReference> analytic_detection(const AttackSpec &attack, Variant variant, size_t n) {
    validate_attack(attack, variant, n);
    double half = static_cast<double>(n / 2);
    if (attack.name == "no_attack") {
        if (variant == Variant::Randomization) {
            return AnalyticReference{0.0, "0"};
        }
        return AnalyticReference{std::pow(0.5, static_cast<double>(n / 4)), "(1/2)^(n/4)"};
    }
    if (attack.name == "impersonate_bob") {
        auto it = attack.params.find("mode");
        bool paper = it == attack.params.end() || it->second == "paper_model";
        if (paper) {
            return AnalyticReference{1.0 - std::pow(5.0 / 8.0, half), "1-(5/8)^(n/2)"};
        }
        return std::nullopt;
    }
    if (attack.name == "intercept_resend") {
        if (variant == Variant::Randomization) {
            return AnalyticReference{1.0 - std::pow(0.5, half), "1-(1/2)^(n/2)"};
        }
        return std::nullopt;
    }
    if (attack.name == "reflect_all") {
        return AnalyticReference{1.0, "1"};
    }
    return std::nullopt;
}

void TrialCounts::add(const RunOutcome &outcome) {
    trials++;
    cause_counts[static_cast<size_t>(outcome.detection_cause)]++;
    bob_received += outcome.bob_received;
    bob_accepts += outcome.bob_accepts;
    alice_accepts += outcome.alice_accepts;
    security_events += outcome.security_event;
    check_slots += outcome.check_slots;
    check_slots_passed += outcome.check_slots_passed;
}

void TrialCounts::merge(const TrialCounts &other) {
    trials += other.trials;
    for (size_t i = 0; i < cause_counts.size(); i++) {
        cause_counts[i] += other.cause_counts[i];
    }
    bob_received += other.bob_received;
    bob_accepts += other.bob_accepts;
    alice_accepts += other.alice_accepts;
    security_events += other.security_events;
    check_slots += other.check_slots;
    check_slots_passed += other.check_slots_passed;
}

uint64_t trial_seed(uint64_t base_seed, uint64_t trial) {
    return derive_seed(base_seed, trial);
}

RunOutcome run_trial(const ExperimentConfig &config, const KeyMaterial &keys, uint64_t index) {
    uint64_t seed = trial_seed(config.seed, index);
    BitString message;
    if (config.message_hex.has_value()) {
        message = BitString::from_hex(*config.message_hex, config.n / 8);
    } else {
        Rng rng(derive_seed(seed, 3));
        message = BitString(config.n / 8);
        for (size_t i = 0; i < message.size(); i++) {
            message.set(i, uniform_bit(rng));
        }
    }
    auto attack = make_attack(config.attack, Rng(derive_seed(seed, 2)));
    return run_session(config.variant, message, keys, *attack, derive_seed(seed, 1), config.min_qubits);
}

TrialCounts run_trials(const ExperimentConfig &config, const KeyMaterial &keys, const std::vector<uint64_t> &indices) {
    TrialCounts counts;
    for (uint64_t i : indices) {
        counts.add(run_trial(config, keys, i));
    }
    return counts;
}

DetectionStats summarize(const ExperimentConfig &config, const KeyMaterial &keys, const TrialCounts &counts) {
    DetectionStats s;
    s.config = config;
    s.k1_hex = keys.k1.to_hex();
    if (keys.k2.has_value()) {
        s.k2_hex = keys.k2->to_hex();
    }
    HashSpec spec = hash_spec(config.n / 8);
    s.hash_identifier = std::string(spec.identifier);
    s.checksum_bits = spec.bits;
    s.version = std::string(kArtifactVersion);

    s.trials = counts.trials;
    s.cause_counts = counts.cause_counts;
    s.bob_received = counts.bob_received;
    s.bob_accepts = counts.bob_accepts;
    s.alice_accepts = counts.alice_accepts;
    s.security_events = counts.security_events;
    s.check_slots = counts.check_slots;
    s.check_slots_passed = counts.check_slots_passed;

    s.bob_accept_rate = rate(counts.bob_accepts, counts.trials);
    s.alice_accept_rate = rate(counts.alice_accepts, counts.trials);
    s.security_event_rate = rate(counts.security_events, counts.trials);
    s.detection_probability = rate(s.detections(), counts.trials);
    s.detection_interval = wilson_interval(s.detections(), counts.trials);
    s.analytic = analytic_detection(config.attack, config.variant, config.n);
    return s;
}

DetectionStats run_experiment(const ExperimentConfig &config) {
    validate_config(config);
    KeyMaterial keys = experiment_keys(config);

    unsigned workers = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<uint64_t>(workers, config.trials));

    std::vector<TrialCounts> partial(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; w++) {
        pool.emplace_back([&, w] {
            try {
                for (uint64_t i = w; i < config.trials; i += workers) {
                    partial[w].add(run_trial(config, keys, i));
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    TrialCounts total;
    for (const auto &p : partial) {
        total.merge(p);
    }
    return summarize(config, keys, total);
}

const std::vector<std::string> &csv_columns() {
    static const std::vector<std::string> kColumns = {
        "artifact",
        "version",
        "variant",
        "attack",
        "attack_params",
        "n",
        "trials",
        "seed",
        "message",
        "hash",
        "checksum_bits",
        "k1",
        "k2",
        "count_none",
        "count_hash_mismatch",
        "count_bell_check_failed",
        "count_reflect_flag",
        "bob_received",
        "bob_accepts",
        "alice_accepts",
        "security_events",
        "check_slots",
        "check_slots_passed",
        "bob_accept_rate",
        "alice_accept_rate",
        "security_event_rate",
        "detection_probability",
        "wilson99_lower",
        "wilson99_upper",
        "analytic_probability",
        "analytic_formula",
    };
    return kColumns;
}

namespace {

json to_json(const DetectionStats &s) {
    const ExperimentConfig &c = s.config;
    json j;
    j["artifact"] = kArtifactName;
    j["version"] = s.version;
    j["config"] = {
        {"variant", variant_name(c.variant)},
        {"attack", {{"name", c.attack.name}, {"params", c.attack.params}}},
        {"n", c.n},
        {"trials", c.trials},
        {"seed", c.seed},
        {"message", c.message_hex.has_value() ? *c.message_hex : std::string("random")},
        {"format", format_name(c.format)},
    };
    j["hash"] = {{"identifier", s.hash_identifier}, {"checksum_bits", s.checksum_bits}};
    j["keys"] = {{"k1", s.k1_hex}, {"k2", s.k2_hex.has_value() ? json(*s.k2_hex) : json(nullptr)}};
    j["trials"] = s.trials;
    json counts;
    for (size_t i = 0; i < s.cause_counts.size(); i++) {
        counts[std::string(cause_name(static_cast<DetectionCause>(i)))] = s.cause_counts[i];
    }
    j["detection_causes"] = counts;
    j["bob_received"] = s.bob_received;
    j["bob_accepts"] = s.bob_accepts;
    j["alice_accepts"] = s.alice_accepts;
    j["security_events"] = s.security_events;
    j["check_slots"] = s.check_slots;
    j["check_slots_passed"] = s.check_slots_passed;
    j["bob_accept_rate"] = s.bob_accept_rate;
    j["alice_accept_rate"] = s.alice_accept_rate;
    j["security_event_rate"] = s.security_event_rate;
    j["detection_probability"] = s.detection_probability;
    j["wilson99"] = {{"lower", s.detection_interval.lower}, {"upper", s.detection_interval.upper}};
    if (s.analytic.has_value()) {
        j["analytic"] = {{"probability", s.analytic->probability}, {"formula", s.analytic->formula}};
    } else {
        j["analytic"] = nullptr;
    }
    return j;
}

std::string to_csv(const DetectionStats &s) {
    const ExperimentConfig &c = s.config;
    std::vector<std::string> row = {
        std::string(kArtifactName),
        s.version,
        std::string(variant_name(c.variant)),
        c.attack.name,
        params_string(c.attack.params),
        std::to_string(c.n),
        std::to_string(c.trials),
        std::to_string(c.seed),
        c.message_hex.value_or("random"),
        s.hash_identifier,
        std::to_string(s.checksum_bits),
        s.k1_hex,
        s.k2_hex.value_or(""),
    };
    for (uint64_t count : s.cause_counts) {
        row.push_back(std::to_string(count));
    }
    for (uint64_t v : {s.bob_received, s.bob_accepts, s.alice_accepts, s.security_events, s.check_slots,
                       s.check_slots_passed}) {
        row.push_back(std::to_string(v));
    }
    for (double v : {s.bob_accept_rate, s.alice_accept_rate, s.security_event_rate, s.detection_probability,
                     s.detection_interval.lower, s.detection_interval.upper}) {
        row.push_back(format_double(v));
    }
    row.push_back(s.analytic.has_value() ? format_double(s.analytic->probability) : "");
    row.push_back(s.analytic.has_value() ? s.analytic->formula : "");

    std::string out;
    const auto &columns = csv_columns();
    for (size_t i = 0; i < columns.size(); i++) {
        out += (i ? "," : "") + columns[i];
    }
    out += "\n";
    for (size_t i = 0; i < row.size(); i++) {
        out += (i ? "," : "") + csv_field(row[i]);
    }
    out += "\n";
    return out;
}

}  // namespace

std::string format_report(const DetectionStats &stats, ReportFormat format) {
    if (format == ReportFormat::Json) {
        return to_json(stats).dump(2) + "\n";
    }
    return to_csv(stats);
}

void emit_report(const DetectionStats &stats, ReportFormat format, std::ostream &out) {
    out << format_report(stats, format);
    if (!out) {
        throw IoError("failed to write report");
    }
}

void emit_report(const DetectionStats &stats, ReportFormat format, const std::filesystem::path &destination) {
    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + destination.string() + "' for writing");
    }
    out << format_report(stats, format);
    out.flush();
    if (!out) {
        throw IoError("failed to write '" + destination.string() + "'");
    }
}

DetectionStats parse_json_report(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("parse_json_report: ") + e.what());
    }
    try {
        DetectionStats s;
        const json &c = j.at("config");
        auto variant = parse_variant(c.at("variant").get<std::string>());
        auto format = parse_format(c.at("format").get<std::string>());
        if (!variant || !format) {
            throw std::invalid_argument("parse_json_report: bad variant or format");
        }
        s.config.variant = *variant;
        s.config.format = *format;
        s.config.attack.name = c.at("attack").at("name").get<std::string>();
        s.config.attack.params = c.at("attack").at("params").get<AttackParams>();
        s.config.n = c.at("n").get<size_t>();
        s.config.trials = c.at("trials").get<uint64_t>();
        s.config.seed = c.at("seed").get<uint64_t>();
        auto message = c.at("message").get<std::string>();
        if (message != "random") {
            s.config.message_hex = message;
        }

        s.version = j.at("version").get<std::string>();
        s.hash_identifier = j.at("hash").at("identifier").get<std::string>();
        s.checksum_bits = j.at("hash").at("checksum_bits").get<size_t>();
        s.k1_hex = j.at("keys").at("k1").get<std::string>();
        if (!j.at("keys").at("k2").is_null()) {
            s.k2_hex = j.at("keys").at("k2").get<std::string>();
        }
        s.trials = j.at("trials").get<uint64_t>();
        for (size_t i = 0; i < s.cause_counts.size(); i++) {
            s.cause_counts[i] =
                j.at("detection_causes").at(std::string(cause_name(static_cast<DetectionCause>(i)))).get<uint64_t>();
        }
        s.bob_received = j.at("bob_received").get<uint64_t>();
        s.bob_accepts = j.at("bob_accepts").get<uint64_t>();
        s.alice_accepts = j.at("alice_accepts").get<uint64_t>();
        s.security_events = j.at("security_events").get<uint64_t>();
        s.check_slots = j.at("check_slots").get<uint64_t>();
        s.check_slots_passed = j.at("check_slots_passed").get<uint64_t>();
        s.bob_accept_rate = j.at("bob_accept_rate").get<double>();
        s.alice_accept_rate = j.at("alice_accept_rate").get<double>();
        s.security_event_rate = j.at("security_event_rate").get<double>();
        s.detection_probability = j.at("detection_probability").get<double>();
        s.detection_interval.lower = j.at("wilson99").at("lower").get<double>();
        s.detection_interval.upper = j.at("wilson99").at("upper").get<double>();
        if (!j.at("analytic").is_null()) {
            s.analytic = AnalyticReference{
                j.at("analytic").at("probability").get<double>(), j.at("analytic").at("formula").get<std::string>()};
        }
        return s;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("parse_json_report: ") + e.what());
    }
}

}  // namespace asqdc
