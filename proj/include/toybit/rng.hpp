// Copyright 2026 The toybit Authors
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

namespace toybit {

/// SplitMix64: a seedable 64-bit generator whose entire state is one word,
/// so streams can be split by hashing (root seed, stream id) into a new seed.
/// Output is identical on every platform.
class SplitMix64 {
   public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform integer in [0, bound), bound > 0. Rejection sampling keeps it unbiased.
    constexpr std::uint32_t uniform(std::uint32_t bound) noexcept {
        const std::uint64_t b = bound;
        const std::uint64_t threshold = (0 - b) % b;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return static_cast<std::uint32_t>(r % b);
        }
    }

    constexpr std::uint64_t state() const noexcept { return state_; }

    /// Independent child stream; the parent is not advanced.
    constexpr SplitMix64 split(std::uint64_t stream) const noexcept {
        return SplitMix64(derive_seed(state_, stream));
    }

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static constexpr std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) noexcept {
        return mix(root ^ mix(stream + 0x9e3779b97f4a7c15ULL));
    }

   private:
    std::uint64_t state_;
};

}  // namespace toybit
