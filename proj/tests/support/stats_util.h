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

#ifndef ASQDC_TESTS_STATS_UTIL_H
#define ASQDC_TESTS_STATS_UTIL_H

#include <cmath>
#include <cstdint>
#include <span>

namespace asqdc::testing {

// Upper 1% points of the chi-square distribution.
inline constexpr double kChi2Crit01Df1 = 6.6348966010212145;
inline constexpr double kChi2Crit01Df3 = 11.344866730144373;
// Sum of 50 independent df=3 statistics.
inline constexpr double kChi2Crit01Df150 = 193.20768638551056;

/// Standard deviation of a binomial proportion estimate.
inline double binomial_sigma(double p, uint64_t trials) {
    return std::sqrt(p * (1 - p) / static_cast<double>(trials));
}

inline bool within_sigmas(double observed, double expected, uint64_t trials, double k = 3.0) {
    return std::fabs(observed - expected) <= k * binomial_sigma(expected, trials);
}

/// Pearson statistic against a uniform expectation.
inline double chi2_uniform(std::span<const uint64_t> counts) {
    uint64_t total = 0;
    for (auto c : counts) {
        total += c;
    }
    double expected = static_cast<double>(total) / static_cast<double>(counts.size());
    double stat = 0;
    for (auto c : counts) {
        double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    return stat;
}

}  // namespace asqdc::testing

#endif
