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

#ifndef ASQDC_KEYS_H
#define ASQDC_KEYS_H

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "asqdc/bitstring.h"
#include "asqdc/random.h"

namespace asqdc {

/// Raised for any session or experiment parameter that violates the
/// protocol's structural constraints.
class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Smallest supported transmitted-sequence length. Below 16 qubits the
/// checksum is a single bit.
inline constexpr size_t kMinQubits = 16;
/// Checksum length n/8 is capped by the 256-bit digest.
inline constexpr size_t kMaxQubits = 2048;

/// n must be a multiple of 8 in [min_qubits, kMaxQubits].
void validate_qubit_count(size_t n, size_t min_qubits = kMinQubits);

/// Pre-shared keys. k1 (n bits, weight n/2) selects, per transmitted
/// position, whether the slot carries a message qubit (0) or a checking
/// qubit (1); in the measure-resend variant the same bit means SHARE (0)
/// or CHECK (1). k2 (n/2 bits) seeds the reflection permutation and is
/// absent for measure-resend sessions.
struct KeyMaterial {
    BitString k1;
    std::optional<BitString> k2;

    size_t qubits() const {
        return k1.size();
    }

    bool operator==(const KeyMaterial &) const = default;
};

KeyMaterial gen_keys(size_t n, Rng &rng, bool with_k2 = true, size_t min_qubits = kMinQubits);

/// Throws ConfigError unless k1 is balanced and k2 (when required) has n/2 bits.
void validate_keys(const KeyMaterial &keys, bool require_k2);

/// Uniformly random balanced string of even length n.
BitString random_balanced(size_t n, Rng &rng);

namespace detail {
void check_interleave_key(const BitString &k1, size_t s_len, size_t cb_len);
}

/// Position i of the result takes the next unused element of s when
/// k1[i] == 0 and of cb otherwise.
template <typename T>
std::vector<T> interleave(std::span<const T> s, std::span<const T> cb, const BitString &k1) {
    detail::check_interleave_key(k1, s.size(), cb.size());
    std::vector<T> out;
    out.reserve(k1.size());
    size_t si = 0;
    size_t ci = 0;
    for (size_t i = 0; i < k1.size(); i++) {
        out.push_back(k1[i] ? cb[ci++] : s[si++]);
    }
    return out;
}

template <typename T>
std::pair<std::vector<T>, std::vector<T>> deinterleave(std::span<const T> q, const BitString &k1) {
    detail::check_interleave_key(k1, q.size() / 2, q.size() - q.size() / 2);
    std::pair<std::vector<T>, std::vector<T>> out;
    out.first.reserve(q.size() / 2);
    out.second.reserve(q.size() / 2);
    for (size_t i = 0; i < q.size(); i++) {
        (k1[i] ? out.second : out.first).push_back(q[i]);
    }
    return out;
}

/// A bijection on 0..size()-1. apply() moves element i to position mapping[i].
class Permutation {
   public:
    explicit Permutation(std::vector<size_t> mapping);
    static Permutation identity(size_t len);

    size_t size() const {
        return mapping_.size();
    }
    const std::vector<size_t> &mapping() const {
        return mapping_;
    }

    template <typename T>
    std::vector<T> apply(std::span<const T> seq) const {
        check_length(seq.size());
        std::vector<T> out(seq.begin(), seq.end());
        for (size_t i = 0; i < seq.size(); i++) {
            out[mapping_[i]] = seq[i];
        }
        return out;
    }

    template <typename T>
    std::vector<T> invert(std::span<const T> seq) const {
        check_length(seq.size());
        std::vector<T> out(seq.begin(), seq.end());
        for (size_t i = 0; i < seq.size(); i++) {
            out[i] = seq[mapping_[i]];
        }
        return out;
    }

    bool operator==(const Permutation &) const = default;

   private:
    void check_length(size_t len) const;

    std::vector<size_t> mapping_;
};

/// Fisher-Yates shuffle of the identity, driven by an mt19937_64 seeded with
/// the first 8 digest bytes (big-endian) of k. Requires len == k.size().
Permutation permutation_from_key(const BitString &k, size_t len);

}  // namespace asqdc

#endif
