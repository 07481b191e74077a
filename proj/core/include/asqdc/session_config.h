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

#ifndef ASQDC_SESSION_CONFIG_H
#define ASQDC_SESSION_CONFIG_H

#include <cstdint>
#include <string>
#include <string_view>

#include "asqdc/adversary.h"
#include "asqdc/bitstring.h"
#include "asqdc/keys.h"
#include "asqdc/protocol.h"

namespace asqdc {

// A single-session configuration document. One `key = value` pair per line;
// blank lines and lines starting with '#' are ignored.
//
//   variant        randomization | measure-resend            (required)
//   n              transmitted qubits, multiple of 8, >= 16  (required)
//   message        n/8-bit message, right-aligned hex        (required)
//   k1             n-bit balanced key, hex                   (required)
//   k2             n/2-bit key, hex                          (randomization only)
//   seed           unsigned 64-bit integer                   (default 0)
//   attack         attack name                               (default no_attack)
//   attack.<name>  attack parameter, e.g. attack.target = 3
struct SessionConfig {
    Variant variant = Variant::Randomization;
    size_t n = 0;
    BitString message;
    KeyMaterial keys;
    uint64_t seed = 0;
    AttackSpec attack;

    bool operator==(const SessionConfig &) const = default;
};

/// Throws ConfigError naming the offending line.
SessionConfig parse_session_config(std::string_view text);
std::string format_session_config(const SessionConfig &config);

/// Runs the configured session. The attack's randomness is derived from the
/// same seed as the session.
RunOutcome run_configured_session(const SessionConfig &config);

/// JSON object with the config echo and every RunOutcome field.
std::string transcript_json(const SessionConfig &config, const RunOutcome &outcome);

}  // namespace asqdc

#endif
