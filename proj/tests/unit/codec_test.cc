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

#include <gtest/gtest.h>

#include <cmath>

#include "support/stats_util.h"

namespace asqdc {
namespace {

BitString random_bits(size_t len, Rng &rng) {
    BitString b(len);
    for (size_t i = 0; i < len; i++) {
        b.set(i, uniform_bit(rng));
    }
    return b;
}

// Vectors below were computed with an independent SHA-256 over the same
// framing: 16-bit big-endian bit length, then MSB-first packed bits.
TEST(HashChecksumTest, PinnedVectors) {
    EXPECT_EQ(hash_checksum(BitString::from_hex("00", 8), 8).to_binary(), "10001111");
    EXPECT_EQ(hash_checksum(BitString::from_binary("00"), 2).to_binary(), "11");
    EXPECT_EQ(hash_checksum(BitString::from_binary("11"), 2).to_binary(), "10");
    EXPECT_EQ(hash_checksum(BitString::from_hex("0", 4), 4).to_binary(), "0011");
    EXPECT_EQ(hash_checksum(BitString::from_hex("a", 4), 4).to_binary(), "0111");
}

TEST(HashChecksumTest, Deterministic) {
    Rng rng(1);
    for (int i = 0; i < 100; i++) {
        auto m = random_bits(16, rng);
        EXPECT_EQ(hash_checksum(m, 16), hash_checksum(m, 16));
    }
}

TEST(HashChecksumTest, AvalancheOverAllEightBitInputs) {
    size_t changed = 0;
    size_t flipped_bits = 0;
    for (uint64_t v = 0; v < 256; v++) {
        auto m = BitString::from_uint(v, 8);
        auto h = hash_checksum(m, 8);
        for (size_t i = 0; i < 8; i++) {
            auto m2 = m;
            m2.flip(i);
            auto h2 = hash_checksum(m2, 8);
            changed += h2 != h;
            for (size_t k = 0; k < 8; k++) {
                flipped_bits += h[k] != h2[k];
            }
        }
    }
    EXPECT_EQ(changed, 2042u);
    EXPECT_EQ(flipped_bits, 8172u);
    EXPECT_GE(static_cast<double>(changed) / 2048.0, 0.35);
}

TEST(HashChecksumTest, Errors) {
    EXPECT_THROW(hash_checksum(BitString(), 0), std::invalid_argument);
    EXPECT_THROW(hash_checksum(BitString(4), 8), std::invalid_argument);
    EXPECT_THROW(hash_checksum(BitString(257), 257), std::invalid_argument);
    EXPECT_NO_THROW(hash_checksum(BitString(256), 256));
    EXPECT_EQ(hash_spec(4).identifier, "sha256");
    EXPECT_EQ(hash_spec(4).bits, 4u);
}

TEST(BuildBlockTest, Layout) {
    auto m = BitString::from_hex("9", 4);
    auto block = build_block(m);
    ASSERT_EQ(block.size(), 8u);
    EXPECT_EQ(block.slice(0, 4), m);
    EXPECT_EQ(block.slice(4, 8), hash_checksum(m, 4));
}

TEST(BuildBlockTest, RoundTripExhaustiveUpToThirtyTwoQubits) {
    for (size_t n : {16u, 24u, 32u}) {
        size_t len = n / 8;
        for (uint64_t v = 0; v < (uint64_t{1} << len); v++) {
            auto m = BitString::from_uint(v, len);
            auto check = verify_block(build_block(m));
            ASSERT_TRUE(check.ok);
            ASSERT_EQ(check.message, m);
        }
    }
}

TEST(BuildBlockTest, RoundTripRandomLarge) {
    Rng rng(2);
    for (size_t n : {64u, 128u, 512u, 2048u}) {
        for (int rep = 0; rep < 50; rep++) {
            auto m = random_bits(n / 8, rng);
            auto check = verify_block(build_block(m));
            ASSERT_TRUE(check.ok);
            ASSERT_EQ(check.message, m);
        }
    }
}

TEST(VerifyBlockTest, TailFlipAlwaysRejected) {
    Rng rng(3);
    for (size_t len : {2u, 4u, 16u}) {
        for (int rep = 0; rep < 200; rep++) {
            auto block = build_block(random_bits(len, rng));
            block.flip(len + uniform_below(rng, len));
            EXPECT_FALSE(verify_block(block).ok);
        }
    }
}

TEST(VerifyBlockTest, MessageFlipRejectedUnlessDigestsCollide) {
    Rng rng(4);
    for (int rep = 0; rep < 500; rep++) {
        auto m = random_bits(8, rng);
        auto block = build_block(m);
        block.flip(uniform_below(rng, 8));
        auto m2 = block.slice(0, 8);
        bool collide = hash_checksum(m2, 8) == hash_checksum(m, 8);
        EXPECT_EQ(verify_block(block).ok, collide);
    }
}

TEST(VerifyBlockTest, ForgeryRateMatchesTruncation) {
    const uint64_t samples = 100000;
    for (size_t n : {16u, 32u}) {
        Rng rng(5 + n);
        uint64_t accepted = 0;
        for (uint64_t i = 0; i < samples; i++) {
            accepted += verify_block(random_bits(n / 4, rng)).ok;
        }
        double expected = std::ldexp(1.0, -static_cast<int>(n / 8));
        EXPECT_TRUE(testing::within_sigmas(static_cast<double>(accepted) / samples, expected, samples))
            << "n=" << n << " accepted=" << accepted;
    }
}

TEST(VerifyBlockTest, LengthErrors) {
    EXPECT_THROW(verify_block(BitString(3)), std::invalid_argument);
    EXPECT_THROW(verify_block(BitString()), std::invalid_argument);
}

TEST(EncodingTest, BitToBellAndBack) {
    EXPECT_EQ(encode_bit(0), BellState::PhiPlus);
    EXPECT_EQ(encode_bit(1), BellState::PsiMinus);
    EXPECT_EQ(decode_pair(0, 0), 0);
    EXPECT_EQ(decode_pair(1, 1), 0);
    EXPECT_EQ(decode_pair(0, 1), 1);
    EXPECT_EQ(decode_pair(1, 0), 1);
    EXPECT_EQ(decode_pairs(BitString::from_binary("00011011")).to_binary(), "0110");
    EXPECT_THROW(decode_pairs(BitString(3)), std::invalid_argument);
}

TEST(EncodingTest, ParityOfMeasuredPairs) {
    QuantumRegister reg(6);
    Rng rng(7);
    for (int i = 0; i < 10000; i++) {
        uint8_t bit = uniform_bit(rng);
        auto [a, b] = reg.prepare_bell(encode_bit(bit));
        auto ra = reg.measure_z(a);
        auto rb = reg.measure_z(b);
        ASSERT_EQ(decode_pair(ra, rb), bit);
        reg.release(a);
        reg.release(b);
    }
}

}  // namespace
}  // namespace asqdc
