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

#ifndef ASQDC_HARNESS_H
#define ASQDC_HARNESS_H

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "asqdc/adversary.h"
#include "asqdc/keys.h"
#include "asqdc/protocol.h"

namespace asqdc {

inline constexpr std::string_view kArtifactName = "asqdc-sim";
inline constexpr std::string_view kArtifactVersion = "1.0.0";

/// Two-sided 99% standard normal quantile.
inline constexpr double kZ99 = 2.5758293035489004;

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class ReportFormat : uint8_t { Json, Csv };

std::string_view format_name(ReportFormat f);
std::optional<ReportFormat> parse_format(std::string_view name);

struct ExperimentConfig {
    Variant variant = Variant::Randomization;
    AttackSpec attack;
    size_t n = 16;
    uint64_t trials = 1;
    uint64_t seed = 0;
    /// Fixed message as right-aligned hex; empty means a fresh random
    /// message per trial.
    std::optional<std::string> message_hex;
    ReportFormat format = ReportFormat::Json;
    /// Worker threads; 0 picks the hardware concurrency. Results do not
    /// depend on it.
    unsigned threads = 0;
    size_t min_qubits = kMinQubits;

    bool operator==(const ExperimentConfig &other) const {
        return variant == other.variant && attack == other.attack && n == other.n && trials == other.trials &&
               seed == other.seed && message_hex == other.message_hex && format == other.format;
    }
};

/// Throws ConfigError on any violation. Called by run_experiment before the
/// first trial.
void validate_config(const ExperimentConfig &config);

/// Keys shared by every session of an experiment, derived from the base seed.
KeyMaterial experiment_keys(const ExperimentConfig &config);

struct WilsonInterval {
    double lower = 0;
    double upper = 1;

    bool contains(double p) const {
        return lower <= p && p <= upper;
    }
    bool operator==(const WilsonInterval &) const = default;
};

WilsonInterval wilson_interval(uint64_t successes, uint64_t trials, double z = kZ99);

struct AnalyticReference {
    double probability = 0;
    std::string formula;

    bool operator==(const AnalyticReference &) const = default;
};

/// Closed-form detection probability for an attack/variant pair, when one
/// exists. Throws ConfigError for unknown or inapplicable attacks.
std::optional<AnalyticReference> analytic_detection(const AttackSpec &attack, Variant variant, size_t n);

struct DetectionStats {
    ExperimentConfig config;
    std::string k1_hex;
    std::optional<std::string> k2_hex;
    std::string hash_identifier;
    size_t checksum_bits = 0;
    std::string version;

    uint64_t trials = 0;
    /// Indexed by DetectionCause.
    std::array<uint64_t, 4> cause_counts{};
    uint64_t bob_received = 0;
    uint64_t bob_accepts = 0;
    uint64_t alice_accepts = 0;
    uint64_t security_events = 0;
    uint64_t check_slots = 0;
    uint64_t check_slots_passed = 0;

    double bob_accept_rate = 0;
    double alice_accept_rate = 0;
    double security_event_rate = 0;
    /// Fraction of trials with a detection cause other than none.
    double detection_probability = 0;
    WilsonInterval detection_interval;
    std::optional<AnalyticReference> analytic;

    uint64_t detections() const {
        return trials - cause_counts[static_cast<size_t>(DetectionCause::None)];
    }
    bool operator==(const DetectionStats &) const = default;
};

/// Accumulates RunOutcomes. merge() is associative and commutative.
struct TrialCounts {
    uint64_t trials = 0;
    std::array<uint64_t, 4> cause_counts{};
    uint64_t bob_received = 0;
    uint64_t bob_accepts = 0;
    uint64_t alice_accepts = 0;
    uint64_t security_events = 0;
    uint64_t check_slots = 0;
    uint64_t check_slots_passed = 0;

    void add(const RunOutcome &outcome);
    void merge(const TrialCounts &other);
    bool operator==(const TrialCounts &) const = default;
};

/// Per-trial seed; trial i of an experiment always runs with this seed.
uint64_t trial_seed(uint64_t base_seed, uint64_t trial);

/// Runs trial `index` of `config` with the experiment keys.
RunOutcome run_trial(const ExperimentConfig &config, const KeyMaterial &keys, uint64_t index);

/// Runs the given trial indices sequentially and tallies them.
TrialCounts run_trials(const ExperimentConfig &config, const KeyMaterial &keys, const std::vector<uint64_t> &indices);

DetectionStats summarize(const ExperimentConfig &config, const KeyMaterial &keys, const TrialCounts &counts);

DetectionStats run_experiment(const ExperimentConfig &config);

/// Column names of the CSV report, in order.
const std::vector<std::string> &csv_columns();

std::string format_report(const DetectionStats &stats, ReportFormat format);
void emit_report(const DetectionStats &stats, ReportFormat format, std::ostream &out);
/// Throws IoError when the destination cannot be written.
void emit_report(const DetectionStats &stats, ReportFormat format, const std::filesystem::path &destination);

/// Inverse of format_report(stats, ReportFormat::Json).
DetectionStats parse_json_report(std::string_view json);

}  // namespace asqdc

#endif
