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

#ifndef ASQDC_CODEC_H
#define ASQDC_CODEC_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "asqdc/bitstring.h"
#include "asqdc/qsim.h"

namespace asqdc {

/// Identifies the digest behind hash_checksum. Reports carry it so a run can
/// be replayed bit for bit.
struct HashSpec {
    std::string_view identifier;
    size_t bits;
};

inline constexpr std::string_view kHashIdentifier = "sha256";
inline constexpr size_t kMaxChecksumBits = 256;

HashSpec hash_spec(size_t checksum_bits);

/// SHA-256 of (16-bit big-endian bit length || MSB-first packed bits).
std::array<uint8_t, 32> digest_bits(const BitString &bits);

/// The first `length` bits of digest_bits(m). Requires length == m.size().
BitString hash_checksum(const BitString &m, size_t length);

/// M = m || h(m).
BitString build_block(const BitString &m);

struct BlockCheck {
    bool ok = false;
    BitString message;
};

/// Splits M' in half and recomputes the checksum of the first half.
BlockCheck verify_block(const BitString &block);

inline BellState encode_bit(uint8_t bit) {
    return bit ? BellState::PsiMinus : BellState::PhiPlus;
}

inline uint8_t decode_pair(uint8_t first, uint8_t second) {
    return static_cast<uint8_t>((first ^ second) & 1);
}

/// Pairwise XOR of consecutive Z outcomes: bit i = bits[2i] ^ bits[2i+1].
BitString decode_pairs(const BitString &outcomes);

}  // namespace asqdc

#endif
