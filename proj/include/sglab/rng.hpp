// Copyright 2026 The sglab Authors
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

#pragma once

#include <cstdint>
#include <limits>

namespace sglab {

/**
 * Counter-based, splittable random stream.
 *
 * Each draw is a pure function of (key, counter): the SplitMix64 output
 * function applied to key + counter * gamma. `split(i)` derives an
 * independent child key, so parallel shots can each own a stream and the
 * result does not depend on scheduling.
 *
 * Satisfies UniformRandomBitGenerator.
 */
class RngStream {
  public:
    using result_type = std::uint64_t;

    explicit RngStream(std::uint64_t seed) noexcept;

    [[nodiscard]] RngStream split(std::uint64_t index) const noexcept;

    result_type operator()() noexcept;

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept;

    /// Standard normal deviate (Box-Muller, no cached second value).
    double normal() noexcept;

    [[nodiscard]] std::uint64_t key() const noexcept { return key_; }
    [[nodiscard]] std::uint64_t counter() const noexcept { return counter_; }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept {
        return std::numeric_limits<result_type>::max();
    }

  private:
    RngStream(std::uint64_t key, std::uint64_t counter) noexcept
        : key_(key), counter_(counter) {}

    std::uint64_t key_;
    std::uint64_t counter_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Draws a seed from system entropy (used for unseeded CLI runs).
std::uint64_t entropy_seed();

} // namespace sglab
