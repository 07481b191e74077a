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

#include "asqdc/keys.h"

#include <numeric>

#include "asqdc/codec.h"

namespace asqdc {

void validate_qubit_count(size_t n, size_t min_qubits) {
    if (n % 8 != 0 || n < min_qubits || n > kMaxQubits) {
        throw ConfigError(
            "qubit count n=" + std::to_string(n) + " must be a multiple of 8 in [" + std::to_string(min_qubits) +
            ", " + std::to_string(kMaxQubits) + "]");
    }
}

BitString random_balanced(size_t n, Rng &rng) {
    std::vector<uint8_t> bits(n, 0);
    std::fill(bits.begin() + static_cast<std::ptrdiff_t>(n / 2), bits.end(), uint8_t{1});
    fisher_yates(bits.begin(), bits.end(), rng);
    BitString out(n);
    for (size_t i = 0; i < n; i++) {
        out.set(i, bits[i]);
    }
    return out;
}

KeyMaterial gen_keys(size_t n, Rng &rng, bool with_k2, size_t min_qubits) {
    validate_qubit_count(n, min_qubits);
    KeyMaterial keys;
    keys.k1 = random_balanced(n, rng);
    if (with_k2) {
        BitString k2(n / 2);
        for (size_t i = 0; i < k2.size(); i++) {
            k2.set(i, uniform_bit(rng));
        }
        keys.k2 = std::move(k2);
    }
    return keys;
}

void validate_keys(const KeyMaterial &keys, bool require_k2) {
    size_t n = keys.k1.size();
    if (n == 0 || n % 2 != 0 || keys.k1.weight() != n / 2) {
        throw ConfigError("k1 must have even length and Hamming weight n/2");
    }
    if (require_k2) {
        if (!keys.k2.has_value()) {
            throw ConfigError("k2 is required for the randomization variant");
        }
        if (keys.k2->size() != n / 2) {
            throw ConfigError("k2 must have n/2 = " + std::to_string(n / 2) + " bits");
        }
    }
}

namespace detail {

void check_interleave_key(const BitString &k1, size_t s_len, size_t cb_len) {
    if (k1.size() != s_len + cb_len || s_len != cb_len) {
        throw std::invalid_argument("interleave: sequences must each hold |k1|/2 elements");
    }
    if (k1.weight() != k1.size() / 2) {
        throw std::invalid_argument("interleave: k1 is not balanced");
    }
}

}  // namespace detail

Permutation::Permutation(std::vector<size_t> mapping) : mapping_(std::move(mapping)) {
    std::vector<uint8_t> seen(mapping_.size(), 0);
    for (size_t v : mapping_) {
        if (v >= mapping_.size() || seen[v]) {
            throw std::invalid_argument("Permutation: mapping is not a bijection");
        }
        seen[v] = 1;
    }
}

Permutation Permutation::identity(size_t len) {
    std::vector<size_t> m(len);
    std::iota(m.begin(), m.end(), size_t{0});
    return Permutation(std::move(m));
}

void Permutation::check_length(size_t len) const {
    if (len != mapping_.size()) {
        throw std::invalid_argument(
            "Permutation: sequence has " + std::to_string(len) + " elements, expected " +
            std::to_string(mapping_.size()));
    }
}

Permutation permutation_from_key(const BitString &k, size_t len) {
    if (k.size() != len) {
        throw std::invalid_argument("permutation_from_key: key length must equal permutation length");
    }
    auto digest = digest_bits(k);
    uint64_t seed = 0;
    for (size_t i = 0; i < 8; i++) {
        seed = (seed << 8) | digest[i];
    }
    Rng rng(seed);
    std::vector<size_t> m(len);
    std::iota(m.begin(), m.end(), size_t{0});
    fisher_yates(m.begin(), m.end(), rng);
    return Permutation(std::move(m));
}

}  // namespace asqdc
