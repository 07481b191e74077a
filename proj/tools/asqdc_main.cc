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

// Command-line front end for the ASQDC simulator.
//
//   asqdc run --variant randomization --attack intercept_resend --n 16 \
//             --trials 100000 --seed 7 --format json --out report.json
//   asqdc analytic --attack impersonate_bob --n 16
//   asqdc list-attacks
//   asqdc session --config session.txt
//
// Exit codes: 0 success, 2 configuration error, 3 I/O error.
// ASQDC_OUTPUT_DIR, when set, receives `run` reports that have no --out.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "asqdc/harness.h"
#include "asqdc/session_config.h"
#include "json.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

asqdc::AttackSpec attack_from_flags(const std::string &name, const std::vector<std::string> &params) {
    asqdc::AttackSpec spec;
    spec.name = name;
    for (const auto &kv : params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw asqdc::ConfigError("--attack-param expects k=v, got '" + kv + "'");
        }
        spec.params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return spec;
}

asqdc::Variant variant_from_flag(const std::string &name) {
    auto v = asqdc::parse_variant(name);
    if (!v) {
        throw asqdc::ConfigError("--variant must be randomization or measure-resend");
    }
    return *v;
}

void write_text(const std::string &text, const std::optional<std::filesystem::path> &path) {
    if (!path) {
        std::cout << text;
        if (!std::cout) {
            throw asqdc::IoError("failed to write to stdout");
        }
        return;
    }
    std::ofstream out(*path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw asqdc::IoError("cannot open '" + path->string() + "' for writing");
    }
    out << text;
    out.flush();
    if (!out) {
        throw asqdc::IoError("failed to write '" + path->string() + "'");
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Authenticated semi-quantum direct communication simulator"};
    app.require_subcommand(1);

    std::string variant = "randomization";
    std::string attack = "no_attack";
    std::vector<std::string> attack_params;
    size_t n = 0;
    uint64_t trials = 0;
    uint64_t seed = 0;
    std::string message;
    std::string format = "json";
    std::string out_path;
    unsigned threads = 0;

    auto *run = app.add_subcommand("run", "Run a Monte Carlo detection experiment");
    run->add_option("--variant", variant, "randomization | measure-resend")->capture_default_str();
    run->add_option("--attack", attack, "Attack name (see list-attacks)")->capture_default_str();
    run->add_option("--attack-param", attack_params, "Attack parameter k=v (repeatable)");
    run->add_option("--n", n, "Transmitted qubits per session")->required();
    run->add_option("--trials", trials, "Number of sessions")->required();
    run->add_option("--seed", seed, "Base seed")->capture_default_str();
    run->add_option("--message", message, "Fixed n/8-bit message as hex (default: random per trial)");
    run->add_option("--format", format, "json | csv")->capture_default_str();
    run->add_option("--out", out_path, "Output file (default: stdout, or $ASQDC_OUTPUT_DIR)");
    run->add_option("--threads", threads, "Worker threads, 0 = all cores")->capture_default_str();

    auto *analytic = app.add_subcommand("analytic", "Print the closed-form detection probability");
    analytic->add_option("--variant", variant, "randomization | measure-resend")->capture_default_str();
    analytic->add_option("--attack", attack, "Attack name")->required();
    analytic->add_option("--attack-param", attack_params, "Attack parameter k=v (repeatable)");
    analytic->add_option("--n", n, "Transmitted qubits per session")->required();

    auto *list = app.add_subcommand("list-attacks", "List available attack strategies");

    std::string config_path;
    auto *session = app.add_subcommand("session", "Run one session from a configuration file and print its transcript");
    session->add_option("--config", config_path, "Session configuration file")->required();
    session->add_option("--out", out_path, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*run) {
            asqdc::ExperimentConfig config;
            config.variant = variant_from_flag(variant);
            config.attack = attack_from_flags(attack, attack_params);
            config.n = n;
            config.trials = trials;
            config.seed = seed;
            if (!message.empty()) {
                config.message_hex = message;
            }
            auto fmt = asqdc::parse_format(format);
            if (!fmt) {
                throw asqdc::ConfigError("--format must be json or csv");
            }
            config.format = *fmt;
            config.threads = threads;
            asqdc::validate_config(config);

            std::optional<std::filesystem::path> destination;
            if (!out_path.empty()) {
                destination = out_path;
            } else if (const char *dir = std::getenv("ASQDC_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
                std::ostringstream name;
                name << "asqdc-" << asqdc::variant_name(config.variant) << "-" << config.attack.name << "-n"
                     << config.n << "-seed" << config.seed << "." << format;
                destination = std::filesystem::path(dir) / name.str();
            }

            auto stats = asqdc::run_experiment(config);
            write_text(asqdc::format_report(stats, config.format), destination);
            if (destination && out_path.empty()) {
                std::cerr << "wrote " << destination->string() << "\n";
            }
        } else if (*analytic) {
            auto spec = attack_from_flags(attack, attack_params);
            auto v = variant_from_flag(variant);
            asqdc::validate_qubit_count(n);
            auto ref = asqdc::analytic_detection(spec, v, n);
            nlohmann::json j = {
                {"attack", spec.name},
                {"params", spec.params},
                {"variant", asqdc::variant_name(v)},
                {"n", n},
                {"probability", ref ? nlohmann::json(ref->probability) : nlohmann::json(nullptr)},
                {"formula", ref ? nlohmann::json(ref->formula) : nlohmann::json(nullptr)},
            };
            write_text(j.dump(2) + "\n", std::nullopt);
        } else if (*list) {
            std::ostringstream text;
            for (const auto &a : asqdc::list_attacks()) {
                text << a.name << "\t" << a.summary;
                if (!a.params.empty()) {
                    text << "\t[" << a.params << "]";
                }
                text << "\n";
            }
            write_text(text.str(), std::nullopt);
        } else if (*session) {
            std::ifstream in(config_path, std::ios::binary);
            if (!in) {
                throw asqdc::IoError("cannot read '" + config_path + "'");
            }
            std::stringstream buf;
            buf << in.rdbuf();
            auto config = asqdc::parse_session_config(buf.str());
            auto outcome = asqdc::run_configured_session(config);
            std::optional<std::filesystem::path> destination;
            if (!out_path.empty()) {
                destination = out_path;
            }
            write_text(asqdc::transcript_json(config, outcome), destination);
        }
    } catch (const asqdc::ConfigError &e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const asqdc::IoError &e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    }
    return 0;
}
