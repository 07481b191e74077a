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

#include "asqdc/codec.h"

#include <openssl/evp.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace asqdc {

HashSpec hash_spec(size_t checksum_bits) {
    return {kHashIdentifier, checksum_bits};
}

std::array<uint8_t, 32> digest_bits(const BitString &bits) {
    if (bits.size() > 0xFFFF) {
        throw std::invalid_argument("digest_bits: input longer than 65535 bits");
    }
    std::vector<uint8_t> input;
    input.push_back(static_cast<uint8_t>(bits.size() >> 8));
    input.push_back(static_cast<uint8_t>(bits.size() & 0xFF));
    auto packed = bits.pack();
    input.insert(input.end(), packed.begin(), packed.end());

    std::array<uint8_t, 32> out{};
    unsigned int len = 0;
    if (EVP_Digest(input.data(), input.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 || len != out.size()) {
        throw std::runtime_error("digest_bits: SHA-256 failed");
    }
    return out;
}

BitString hash_checksum(const BitString &m, size_t length) {
    if (length == 0) {
        throw std::invalid_argument("hash_checksum: length must be positive");
    }
    if (m.size() != length) {
        throw std::invalid_argument(
            "hash_checksum: message has " + std::to_string(m.size()) + " bits, expected " + std::to_string(length));
    }
    if (length > kMaxChecksumBits) {
        throw std::invalid_argument("hash_checksum: at most 256 checksum bits are available");
    }
    auto digest = digest_bits(m);
    BitString out(length);
    for (size_t i = 0; i < length; i++) {
        out.set(i, (digest[i / 8] >> (7 - i % 8)) & 1);
    }
    return out;
}

BitString build_block(const BitString &m) {
    return m.concat(hash_checksum(m, m.size()));
}

BlockCheck verify_block(const BitString &block) {
    if (block.size() < 2 || block.size() % 2 != 0) {
        throw std::invalid_argument("verify_block: block length must be even and at least 2");
    }
    size_t half = block.size() / 2;
    BlockCheck out;
    out.message = block.slice(0, half);
    out.ok = hash_checksum(out.message, half) == block.slice(half, block.size());
    return out;
}

BitString decode_pairs(const BitString &outcomes) {
    if (outcomes.size() % 2 != 0) {
        throw std::invalid_argument("decode_pairs: odd number of outcomes");
    }
    BitString out(outcomes.size() / 2);
    for (size_t i = 0; i < out.size(); i++) {
        out.set(i, decode_pair(outcomes[2 * i], outcomes[2 * i + 1]));
    }
    return out;
}

}  // namespace asqdc
