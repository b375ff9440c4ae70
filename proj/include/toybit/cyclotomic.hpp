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

#include <array>
#include <cstdint>
#include <string>

namespace toybit {

/// (a + bζ + cζ² + dζ³) / √2^k with ζ = exp(iπ/4), k minimal.
class Cyclotomic {
   public:
    constexpr Cyclotomic() = default;
    Cyclotomic(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, int k = 0);

    static Cyclotomic zeta_power(int p);  // ζ^p, any integer p
    static Cyclotomic sqrt2_inverse() { return Cyclotomic(1, 0, 0, 0, 1); }

    std::int64_t coeff(int i) const noexcept { return c_[static_cast<std::size_t>(i)]; }
    const std::array<std::int64_t, 4> &coeffs() const noexcept { return c_; }
    int half_power() const noexcept { return k_; }
    bool is_zero() const noexcept { return c_ == std::array<std::int64_t, 4>{}; }

    Cyclotomic operator+(const Cyclotomic &rhs) const;
    Cyclotomic operator-() const;
    Cyclotomic operator-(const Cyclotomic &rhs) const { return *this + (-rhs); }
    Cyclotomic operator*(const Cyclotomic &rhs) const;
    Cyclotomic conj() const;

    bool operator==(const Cyclotomic &) const = default;

    /// "a,b,c,d,k"
    std::string to_string() const;

   private:
    void normalize();

    std::array<std::int64_t, 4> c_{};
    int k_ = 0;
};

}  // namespace toybit
