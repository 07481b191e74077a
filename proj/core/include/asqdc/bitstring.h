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

#ifndef ASQDC_BITSTRING_H
#define ASQDC_BITSTRING_H

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace asqdc {

/// An ordered sequence of classical bits. Bit 0 is the first (leftmost) bit.
///
/// Hex form is right-aligned: the string is read as a big-endian number and
/// the low `size()` bits are the bit string, most significant first. Any
/// padding bits above `size()` must be zero.
class BitString {
   public:
    BitString() = default;
    explicit BitString(size_t length) : bits_(length, 0) {
    }
    BitString(std::initializer_list<int> bits);

    static BitString from_hex(std::string_view hex, size_t length);
    static BitString from_binary(std::string_view binary);
    /// Low `length` bits of `value`, most significant first.
    static BitString from_uint(uint64_t value, size_t length);

    std::string to_hex() const;
    std::string to_binary() const;

    size_t size() const {
        return bits_.size();
    }
    bool empty() const {
        return bits_.empty();
    }
    uint8_t operator[](size_t i) const {
        return bits_[i];
    }
    uint8_t at(size_t i) const;
    void set(size_t i, uint8_t bit);
    void flip(size_t i);
    void push_back(uint8_t bit);

    size_t weight() const;
    BitString slice(size_t begin, size_t end) const;
    BitString concat(const BitString &tail) const;

    /// MSB-first byte packing, zero padded at the end.
    std::vector<uint8_t> pack() const;

    const std::vector<uint8_t> &bits() const {
        return bits_;
    }

    bool operator==(const BitString &other) const = default;

   private:
    std::vector<uint8_t> bits_;
};

}  // namespace asqdc

#endif
