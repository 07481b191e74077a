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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numeric>
#include <set>
#include <sstream>

namespace asqdc {
namespace {

ExperimentConfig config_for(std::string attack, Variant v, size_t n, uint64_t trials, uint64_t seed) {
    ExperimentConfig c;
    c.variant = v;
    c.attack.name = std::move(attack);
    c.n = n;
    c.trials = trials;
    c.seed = seed;
    c.threads = 1;
    return c;
}

TEST(AnalyticTest, ClosedForms) {
    auto bob = analytic_detection({"impersonate_bob", {}}, Variant::Randomization, 16);
    ASSERT_TRUE(bob.has_value());
    EXPECT_NEAR(bob->probability, 1.0 - 390625.0 / 16777216.0, 1e-15);
    EXPECT_NEAR(bob->probability, 0.976716935634613, 1e-12);
    EXPECT_EQ(bob->formula, "1-(5/8)^(n/2)");

    auto ir = analytic_detection({"intercept_resend", {}}, Variant::Randomization, 16);
    ASSERT_TRUE(ir.has_value());
    EXPECT_EQ(ir->probability, 0.99609375);

    EXPECT_EQ(analytic_detection({"no_attack", {}}, Variant::Randomization, 32)->probability, 0.0);
    EXPECT_EQ(analytic_detection({"no_attack", {}}, Variant::MeasureResend, 16)->probability, 0.0625);
    EXPECT_EQ(analytic_detection({"reflect_all", {}}, Variant::MeasureResend, 16)->probability, 1.0);

    EXPECT_FALSE(analytic_detection({"impersonate_bob", {{"mode", "concrete"}}}, Variant::Randomization, 16));
    EXPECT_FALSE(analytic_detection({"impersonate_alice", {}}, Variant::Randomization, 16));
    EXPECT_FALSE(analytic_detection({"modify_single", {}}, Variant::Randomization, 16));
    EXPECT_FALSE(analytic_detection({"intercept_resend", {}}, Variant::MeasureResend, 16));
    EXPECT_THROW(analytic_detection({"bogus", {}}, Variant::Randomization, 16), ConfigError);
}

// Reference values from an independent Wilson implementation at z = 2.5758...
TEST(WilsonTest, FrozenValues) {
    struct Case {
        uint64_t k, n;
        double lo, hi;
    };
    for (const auto &c : {
             Case{0, 100, 0.0, 0.062220687715822995},
             Case{100, 100, 0.93777931228417721, 1.0},
             Case{50, 100, 0.3752796250448398, 0.6247203749551602},
             Case{99617, 100000, 0.99563288930922622, 0.9966412743260179},
             Case{976, 1000, 0.96004719716646303, 0.98567801384549369},
             Case{1, 10, 0.011851503411032971, 0.50723177123289354},
         }) {
        auto w = wilson_interval(c.k, c.n);
        EXPECT_NEAR(w.lower, c.lo, 1e-12) << c.k << "/" << c.n;
        EXPECT_NEAR(w.upper, c.hi, 1e-12) << c.k << "/" << c.n;
        EXPECT_TRUE(w.contains(static_cast<double>(c.k) / c.n));
    }
}

TEST(ValidateConfigTest, RejectsBadInput) {
    auto ok = config_for("no_attack", Variant::Randomization, 16, 1, 0);
    EXPECT_NO_THROW(validate_config(ok));
    auto bad = ok;
    bad.n = 12;
    EXPECT_THROW(validate_config(bad), ConfigError);
    bad = ok;
    bad.trials = 0;
    EXPECT_THROW(validate_config(bad), ConfigError);
    bad = ok;
    bad.message_hex = "7";
    EXPECT_THROW(validate_config(bad), ConfigError);
    bad.message_hex = "3";
    EXPECT_NO_THROW(validate_config(bad));
    bad = ok;
    bad.attack.name = "reflect_all";
    EXPECT_THROW(validate_config(bad), ConfigError);
    EXPECT_THROW(run_experiment(bad), ConfigError);
}

TEST(RunExperimentTest, HonestRandomizationIsNeverDetected) {
    auto stats = run_experiment(config_for("no_attack", Variant::Randomization, 32, 10000, 3));
    EXPECT_EQ(stats.trials, 10000u);
    EXPECT_EQ(stats.detection_probability, 0.0);
    EXPECT_EQ(stats.security_event_rate, 0.0);
    EXPECT_EQ(stats.bob_accepts, 10000u);
    EXPECT_EQ(stats.alice_accepts, 10000u);
    EXPECT_EQ(std::accumulate(stats.cause_counts.begin(), stats.cause_counts.end(), uint64_t{0}), stats.trials);
}

TEST(RunExperimentTest, SameSeedSameReport) {
    auto c = config_for("intercept_resend", Variant::Randomization, 16, 2000, 7);
    auto a = format_report(run_experiment(c), ReportFormat::Json);
    auto b = format_report(run_experiment(c), ReportFormat::Json);
    EXPECT_EQ(a, b);
    EXPECT_NE(a.find("\"seed\": 7"), std::string::npos);
}

TEST(RunExperimentTest, ThreadCountDoesNotChangeResults) {
    auto c = config_for("impersonate_bob", Variant::Randomization, 16, 3000, 8);
    auto one = run_experiment(c);
    c.threads = 3;
    auto three = run_experiment(c);
    c.threads = 7;
    auto seven = run_experiment(c);
    EXPECT_EQ(one, three);
    EXPECT_EQ(one, seven);
}

TEST(RunExperimentTest, TrialOrderDoesNotChangeCounts) {
    auto c = config_for("modify_single", Variant::Randomization, 16, 2000, 9);
    auto keys = experiment_keys(c);
    std::vector<uint64_t> idx(c.trials);
    std::iota(idx.begin(), idx.end(), uint64_t{0});
    auto forward = run_trials(c, keys, idx);
    Rng rng(1);
    fisher_yates(idx.begin(), idx.end(), rng);
    auto shuffled = run_trials(c, keys, idx);
    EXPECT_EQ(forward, shuffled);
    EXPECT_EQ(summarize(c, keys, forward), run_experiment(c));
}

TEST(RunExperimentTest, TrialSeedsAreDistinct) {
    std::set<uint64_t> seeds;
    for (uint64_t i = 0; i < 100000; i++) {
        seeds.insert(trial_seed(42, i));
    }
    EXPECT_EQ(seeds.size(), 100000u);
}

TEST(RunExperimentTest, KeysAreSharedAcrossTrials) {
    auto c = config_for("no_attack", Variant::Randomization, 16, 1, 11);
    auto keys = experiment_keys(c);
    EXPECT_EQ(keys, experiment_keys(c));
    EXPECT_EQ(run_experiment(c).k1_hex, keys.k1.to_hex());
    c.variant = Variant::MeasureResend;
    EXPECT_FALSE(experiment_keys(c).k2.has_value());
}

TEST(RunExperimentTest, FixedMessageIsUsed) {
    auto c = config_for("no_attack", Variant::Randomization, 16, 1, 12);
    c.message_hex = "2";
    auto keys = experiment_keys(c);
    auto r = run_trial(c, keys, 0);
    EXPECT_EQ(r.decoded_message, BitString::from_binary("10"));
}

TEST(ReportTest, JsonRoundTrip) {
    for (auto attack : {"intercept_resend", "impersonate_alice"}) {
        auto c = config_for(attack, Variant::Randomization, 32, 500, 13);
        c.message_hex = "a";
        auto stats = run_experiment(c);
        auto parsed = parse_json_report(format_report(stats, ReportFormat::Json));
        EXPECT_EQ(parsed, stats);
    }
    auto mr = run_experiment(config_for("reflect_all", Variant::MeasureResend, 16, 50, 14));
    EXPECT_EQ(parse_json_report(format_report(mr, ReportFormat::Json)), mr);
    EXPECT_THROW(parse_json_report("{"), std::invalid_argument);
}

TEST(ReportTest, CsvHasTheDocumentedColumns) {
    auto stats = run_experiment(config_for("impersonate_bob", Variant::Randomization, 16, 100, 15));
    auto csv = format_report(stats, ReportFormat::Csv);
    std::istringstream in(csv);
    std::string header;
    std::string row;
    std::getline(in, header);
    std::getline(in, row);
    std::string extra;
    EXPECT_FALSE(std::getline(in, extra));
    EXPECT_EQ(csv_columns().size(), 31u);
    EXPECT_EQ(static_cast<size_t>(std::count(header.begin(), header.end(), ',')) + 1, csv_columns().size());
    // No field contains a comma here, so commas count the fields.
    EXPECT_EQ(static_cast<size_t>(std::count(row.begin(), row.end(), ',')) + 1, csv_columns().size());
    EXPECT_EQ(header.substr(0, 17), "artifact,version,");
}

TEST(ReportTest, UnwritableDestination) {
    auto stats = run_experiment(config_for("no_attack", Variant::Randomization, 16, 1, 16));
    auto bad = std::filesystem::temp_directory_path() / "asqdc-missing-dir" / "x" / "report.json";
    EXPECT_THROW(emit_report(stats, ReportFormat::Json, bad), IoError);

    auto good = std::filesystem::temp_directory_path() / "asqdc-harness-report.json";
    emit_report(stats, ReportFormat::Json, good);
    EXPECT_TRUE(std::filesystem::exists(good));
    std::filesystem::remove(good);
}

// Binomial sanity on the intervals themselves: 20 independent experiments
// per analytic reference, at least 18 must cover it.
TEST(CoverageTest, WilsonIntervalsCoverAnalyticReferences) {
    struct Case {
        const char *attack;
        Variant variant;
    };
    for (const auto &c : {
             Case{"no_attack", Variant::Randomization},
             Case{"no_attack", Variant::MeasureResend},
             Case{"impersonate_bob", Variant::Randomization},
             Case{"intercept_resend", Variant::Randomization},
             Case{"reflect_all", Variant::MeasureResend},
         }) {
        int covering = 0;
        for (uint64_t rep = 0; rep < 20; rep++) {
            auto stats = run_experiment(config_for(c.attack, c.variant, 16, 10000, 1000 + rep));
            ASSERT_TRUE(stats.analytic.has_value());
            covering += stats.detection_interval.contains(stats.analytic->probability);
        }
        EXPECT_GE(covering, 18) << c.attack << " " << variant_name(c.variant);
    }
}

}  // namespace
}  // namespace asqdc
