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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toybit {

/// Bijection of {0, ..., n-1} stored as its image array.
/// Composition follows matrix order: (a * b)(i) = a(b(i)), so b acts first.
class Permutation {
   public:
    using Point = std::uint16_t;

    Permutation() = default;
    /// Throws std::invalid_argument unless `images` is a bijection.
    explicit Permutation(std::vector<Point> images);

    static Permutation identity(std::size_t degree);
    /// Cycle notation with 1-based points, e.g. "(123)(4)" or "(1,2)(3,4)".
    /// Digits are single points unless commas separate them.
    static Permutation from_cycles(std::size_t degree, std::string_view cycles);

    std::size_t degree() const noexcept { return images_.size(); }
    Point operator[](std::size_t i) const noexcept { return images_[i]; }
    std::span<const Point> images() const noexcept { return images_; }

    Permutation operator*(const Permutation &rhs) const;
    Permutation inverse() const;
    Permutation identity() const { return identity(degree()); }
    bool is_identity() const noexcept;

    std::string key() const;
    /// 1-based cycle notation including fixed points, e.g. "(123)(4)".
    std::string to_cycles() const;

    bool operator==(const Permutation &) const = default;
    auto operator<=>(const Permutation &) const = default;

   private:
    std::vector<Point> images_;
};

}  // namespace toybit
