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

#ifndef ASQDC_RANDOM_H
#define ASQDC_RANDOM_H

#include <cstdint>
#include <random>
#include <utility>

namespace asqdc {

// The standard distributions are implementation-defined, so every draw that
// has to be reproducible across toolchains goes through the helpers below.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built from the top 53 bits of one engine output.
inline double uniform_unit(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) by rejection sampling. bound must be > 0.
inline uint64_t uniform_below(Rng &rng, uint64_t bound) {
    uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    while (true) {
        uint64_t x = rng();
        if (x < limit) {
            return x % bound;
        }
    }
}

inline uint8_t uniform_bit(Rng &rng) {
    return static_cast<uint8_t>(rng() >> 63);
}

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Child seed for stream `index` under `parent`. Distinct indices give
/// unrelated streams.
inline uint64_t derive_seed(uint64_t parent, uint64_t index) {
    return splitmix64(splitmix64(parent) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

template <typename It>
void fisher_yates(It first, It last, Rng &rng) {
    auto n = last - first;
    for (auto i = n - 1; i > 0; i--) {
        auto j = static_cast<decltype(i)>(uniform_below(rng, static_cast<uint64_t>(i) + 1));
        using std::swap;
        swap(first[i], first[j]);
    }
}

}  // namespace asqdc

#endif
