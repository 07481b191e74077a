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

#include <stdexcept>

namespace asqdc {

namespace {

int hex_value(char c) {
    if (c >= '0' && c <= '9') {
        return c - '0';
    }
    if (c >= 'a' && c <= 'f') {
        return c - 'a' + 10;
    }
    if (c >= 'A' && c <= 'F') {
        return c - 'A' + 10;
    }
    return -1;
}

}  // namespace

BitString::BitString(std::initializer_list<int> bits) {
    bits_.reserve(bits.size());
    for (int b : bits) {
        if (b != 0 && b != 1) {
            throw std::invalid_argument("BitString: bits must be 0 or 1");
        }
        bits_.push_back(static_cast<uint8_t>(b));
    }
}

BitString BitString::from_hex(std::string_view hex, size_t length) {
    if (hex.starts_with("0x") || hex.starts_with("0X")) {
        hex.remove_prefix(2);
    }
    if (hex.empty()) {
        throw std::invalid_argument("BitString::from_hex: empty hex string");
    }
    std::vector<uint8_t> raw;
    raw.reserve(hex.size() * 4);
    for (char c : hex) {
        int v = hex_value(c);
        if (v < 0) {
            throw std::invalid_argument("BitString::from_hex: invalid hex digit '" + std::string(1, c) + "'");
        }
        for (int k = 3; k >= 0; k--) {
            raw.push_back(static_cast<uint8_t>((v >> k) & 1));
        }
    }
    if (raw.size() < length) {
        raw.insert(raw.begin(), length - raw.size(), 0);
    }
    size_t excess = raw.size() - length;
    for (size_t i = 0; i < excess; i++) {
        if (raw[i]) {
            throw std::invalid_argument(
                "BitString::from_hex: value '" + std::string(hex) + "' does not fit in " + std::to_string(length) +
                " bits");
        }
    }
    BitString out;
    out.bits_.assign(raw.begin() + static_cast<std::ptrdiff_t>(excess), raw.end());
    return out;
}

BitString BitString::from_binary(std::string_view binary) {
    BitString out;
    out.bits_.reserve(binary.size());
    for (char c : binary) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("BitString::from_binary: invalid character");
        }
        out.bits_.push_back(static_cast<uint8_t>(c - '0'));
    }
    return out;
}

BitString BitString::from_uint(uint64_t value, size_t length) {
    if (length < 64 && (value >> length) != 0) {
        throw std::invalid_argument("BitString::from_uint: value does not fit");
    }
    BitString out(length);
    for (size_t i = 0; i < length; i++) {
        size_t shift = length - 1 - i;
        out.bits_[i] = shift < 64 ? static_cast<uint8_t>((value >> shift) & 1) : 0;
    }
    return out;
}

std::string BitString::to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    size_t digits = (bits_.size() + 3) / 4;
    if (digits == 0) {
        return "";
    }
    size_t pad = digits * 4 - bits_.size();
    std::string out;
    out.reserve(digits);
    int acc = 0;
    size_t filled = pad;
    for (uint8_t b : bits_) {
        acc = (acc << 1) | b;
        if (++filled == 4) {
            out.push_back(kDigits[acc]);
            acc = 0;
            filled = 0;
        }
    }
    return out;
}

std::string BitString::to_binary() const {
    std::string out;
    out.reserve(bits_.size());
    for (uint8_t b : bits_) {
        out.push_back(static_cast<char>('0' + b));
    }
    return out;
}

uint8_t BitString::at(size_t i) const {
    if (i >= bits_.size()) {
        throw std::out_of_range("BitString::at: index out of range");
    }
    return bits_[i];
}

void BitString::set(size_t i, uint8_t bit) {
    if (i >= bits_.size()) {
        throw std::out_of_range("BitString::set: index out of range");
    }
    bits_[i] = bit ? 1 : 0;
}

void BitString::flip(size_t i) {
    if (i >= bits_.size()) {
        throw std::out_of_range("BitString::flip: index out of range");
    }
    bits_[i] ^= 1;
}

void BitString::push_back(uint8_t bit) {
    bits_.push_back(bit ? 1 : 0);
}

size_t BitString::weight() const {
    size_t w = 0;
    for (uint8_t b : bits_) {
        w += b;
    }
    return w;
}

BitString BitString::slice(size_t begin, size_t end) const {
    if (begin > end || end > bits_.size()) {
        throw std::out_of_range("BitString::slice: bad range");
    }
    BitString out;
    out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(begin), bits_.begin() + static_cast<std::ptrdiff_t>(end));
    return out;
}

BitString BitString::concat(const BitString &tail) const {
    BitString out = *this;
    out.bits_.insert(out.bits_.end(), tail.bits_.begin(), tail.bits_.end());
    return out;
}

std::vector<uint8_t> BitString::pack() const {
    std::vector<uint8_t> out((bits_.size() + 7) / 8, 0);
    for (size_t i = 0; i < bits_.size(); i++) {
        if (bits_[i]) {
            out[i / 8] |= static_cast<uint8_t>(0x80u >> (i % 8));
        }
    }
    return out;
}

}  // namespace asqdc
