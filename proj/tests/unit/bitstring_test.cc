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

#include "asqdc/bitstring.h"

#include <gtest/gtest.h>

#include "asqdc/random.h"

namespace asqdc {
namespace {

TEST(BitStringTest, HexIsRightAligned) {
    auto b = BitString::from_hex("3", 2);
    EXPECT_EQ(b.to_binary(), "11");
    EXPECT_EQ(b.to_hex(), "3");

    auto w = BitString::from_hex("0x5", 8);
    EXPECT_EQ(w.to_binary(), "00000101");
    EXPECT_EQ(w.to_hex(), "05");

    EXPECT_EQ(BitString::from_hex("00ff", 8).to_binary(), "11111111");
    EXPECT_EQ(BitString::from_hex("AbC", 12).to_hex(), "abc");
}

TEST(BitStringTest, HexRejectsOverflowAndJunk) {
    EXPECT_THROW(BitString::from_hex("4", 2), std::invalid_argument);
    EXPECT_THROW(BitString::from_hex("1ff", 8), std::invalid_argument);
    EXPECT_THROW(BitString::from_hex("zz", 8), std::invalid_argument);
    EXPECT_THROW(BitString::from_hex("", 8), std::invalid_argument);
}

TEST(BitStringTest, HexRoundTripRandom) {
    Rng rng(11);
    for (size_t len : {1u, 2u, 3u, 7u, 8u, 13u, 32u, 64u, 100u}) {
        for (int rep = 0; rep < 50; rep++) {
            BitString b(len);
            for (size_t i = 0; i < len; i++) {
                b.set(i, uniform_bit(rng));
            }
            EXPECT_EQ(BitString::from_hex(b.to_hex(), len), b);
            EXPECT_EQ(BitString::from_binary(b.to_binary()), b);
        }
    }
}

TEST(BitStringTest, FromUintMostSignificantFirst) {
    EXPECT_EQ(BitString::from_uint(0xA5, 8).to_binary(), "10100101");
    EXPECT_EQ(BitString::from_uint(1, 3).to_binary(), "001");
    EXPECT_THROW(BitString::from_uint(8, 3), std::invalid_argument);
}

TEST(BitStringTest, PackIsMsbFirstWithTrailingPad) {
    auto b = BitString::from_binary("1010000011");
    auto p = b.pack();
    ASSERT_EQ(p.size(), 2u);
    EXPECT_EQ(p[0], 0xA0);
    EXPECT_EQ(p[1], 0xC0);
}

TEST(BitStringTest, SliceConcatWeight) {
    auto b = BitString::from_binary("110100");
    EXPECT_EQ(b.weight(), 3u);
    EXPECT_EQ(b.slice(1, 4).to_binary(), "101");
    EXPECT_EQ(b.slice(0, 3).concat(b.slice(3, 6)), b);
    EXPECT_THROW(b.slice(4, 2), std::out_of_range);
    EXPECT_THROW(b.at(6), std::out_of_range);
    EXPECT_THROW(BitString({0, 2}), std::invalid_argument);
}

}  // namespace
}  // namespace asqdc
