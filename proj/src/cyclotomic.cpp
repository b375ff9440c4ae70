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

#include "toybit/cyclotomic.hpp"

#include <stdexcept>

namespace toybit {

namespace {

using Coeffs = std::array<std::int64_t, 4>;

// Multiplication by √2 = ζ - ζ³.
Coeffs times_sqrt2(const Coeffs &x) {
    return {x[1] - x[3], x[0] + x[2], x[1] + x[3], x[2] - x[0]};
}

}  // namespace

Cyclotomic::Cyclotomic(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, int k) : c_{a, b, c, d}, k_(k) {
    if (k < 0) throw std::invalid_argument("negative √2 exponent");
    normalize();
}

Cyclotomic Cyclotomic::zeta_power(int p) {
    p = ((p % 8) + 8) % 8;
    Coeffs c{};
    c[static_cast<std::size_t>(p % 4)] = p < 4 ? 1 : -1;
    return Cyclotomic(c[0], c[1], c[2], c[3]);
}

void Cyclotomic::normalize() {
    if (is_zero()) {
        k_ = 0;
        return;
    }
    while (k_ > 0) {
        const Coeffs y = times_sqrt2(c_);
        for (auto v : y) {
            if (v & 1) return;
        }
        for (std::size_t i = 0; i < 4; ++i) c_[i] = y[i] / 2;
        --k_;
    }
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic &rhs) const {
    Coeffs a = c_;
    Coeffs b = rhs.c_;
    int k = k_;
    for (int j = k_; j < rhs.k_; ++j) a = times_sqrt2(a);
    for (int j = rhs.k_; j < k_; ++j) b = times_sqrt2(b);
    if (rhs.k_ > k) k = rhs.k_;
    return Cyclotomic(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3], k);
}

Cyclotomic Cyclotomic::operator-() const { return Cyclotomic(-c_[0], -c_[1], -c_[2], -c_[3], k_); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic &rhs) const {
    const auto &[a, b, c, d] = c_;
    const auto &[e, f, g, h] = rhs.c_;
    // ζ⁴ = -1
    return Cyclotomic(a * e - b * h - c * g - d * f, a * f + b * e - c * h - d * g, a * g + b * f + c * e - d * h,
                      a * h + b * g + c * f + d * e, k_ + rhs.k_);
}

Cyclotomic Cyclotomic::conj() const { return Cyclotomic(c_[0], -c_[3], -c_[2], -c_[1], k_); }

std::string Cyclotomic::to_string() const {
    return std::to_string(c_[0]) + "," + std::to_string(c_[1]) + "," + std::to_string(c_[2]) + "," +
           std::to_string(c_[3]) + "," + std::to_string(k_);
}

}  // namespace toybit
