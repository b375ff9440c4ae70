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

#include "toybit/scaled_matrix.hpp"

#include <stdexcept>

namespace toybit {

ScaledMatrix::ScaledMatrix(int dim, std::vector<std::int64_t> numerators, int denom_exp)
    : dim_(dim), denom_exp_(denom_exp), num_(std::move(numerators)) {
    if (dim <= 0 || num_.size() != static_cast<std::size_t>(dim * dim)) {
        throw std::invalid_argument("matrix entry count does not match dimension");
    }
    if (denom_exp < 0) throw std::invalid_argument("negative denominator exponent");
    normalize();
}

ScaledMatrix ScaledMatrix::identity(int dim) {
    std::vector<std::int64_t> n(static_cast<std::size_t>(dim * dim), 0);
    for (int i = 0; i < dim; ++i) n[static_cast<std::size_t>(i * dim + i)] = 1;
    return ScaledMatrix(dim, std::move(n), 0);
}

ScaledMatrix ScaledMatrix::from_permutation(const Permutation &p) {
    const int d = static_cast<int>(p.degree());
    std::vector<std::int64_t> n(static_cast<std::size_t>(d * d), 0);
    for (int j = 0; j < d; ++j) n[static_cast<std::size_t>(p[static_cast<std::size_t>(j)] * d + j)] = 1;
    return ScaledMatrix(d, std::move(n), 0);
}

void ScaledMatrix::normalize() {
    while (denom_exp_ > 0) {
        for (auto v : num_) {
            if (v & 1) return;
        }
        for (auto &v : num_) v /= 2;
        --denom_exp_;
    }
}

Rational ScaledMatrix::at(int row, int col) const {
    return Rational(numerator(row, col), std::int64_t{1} << denom_exp_);
}

ScaledMatrix ScaledMatrix::operator*(const ScaledMatrix &rhs) const {
    if (rhs.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
    const std::size_t d = static_cast<std::size_t>(dim_);
    std::vector<std::int64_t> out(d * d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            const auto a = num_[i * d + k];
            if (a == 0) continue;
            const auto *row = &rhs.num_[k * d];
            auto *dst = &out[i * d];
            for (std::size_t j = 0; j < d; ++j) dst[j] += a * row[j];
        }
    }
    return ScaledMatrix(dim_, std::move(out), denom_exp_ + rhs.denom_exp_);
}

ScaledMatrix ScaledMatrix::transpose() const {
    const std::size_t d = static_cast<std::size_t>(dim_);
    std::vector<std::int64_t> out(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) out[j * d + i] = num_[i * d + j];
    }
    return ScaledMatrix(dim_, std::move(out), denom_exp_);
}

ScaledMatrix ScaledMatrix::kron(const ScaledMatrix &rhs) const {
    const int d = dim_ * rhs.dim_;
    std::vector<std::int64_t> out(static_cast<std::size_t>(d * d));
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            for (int k = 0; k < rhs.dim_; ++k) {
                for (int l = 0; l < rhs.dim_; ++l) {
                    out[static_cast<std::size_t>((i * rhs.dim_ + k) * d + j * rhs.dim_ + l)] =
                        numerator(i, j) * rhs.numerator(k, l);
                }
            }
        }
    }
    return ScaledMatrix(d, std::move(out), denom_exp_ + rhs.denom_exp_);
}

bool ScaledMatrix::is_orthogonal() const { return *this * transpose() == identity(); }

bool ScaledMatrix::is_permutation_matrix() const { return as_permutation().has_value(); }

std::optional<Permutation> ScaledMatrix::as_permutation() const {
    if (denom_exp_ != 0) return std::nullopt;
    std::vector<Permutation::Point> img(static_cast<std::size_t>(dim_));
    for (int j = 0; j < dim_; ++j) {
        int hits = 0;
        for (int i = 0; i < dim_; ++i) {
            const auto v = numerator(i, j);
            if (v == 1) {
                img[static_cast<std::size_t>(j)] = static_cast<Permutation::Point>(i);
                ++hits;
            } else if (v != 0) {
                return std::nullopt;
            }
        }
        if (hits != 1) return std::nullopt;
    }
    try {
        return Permutation(std::move(img));
    } catch (const std::invalid_argument &) {
        return std::nullopt;
    }
}

std::optional<std::vector<std::int64_t>> ScaledMatrix::apply(std::span<const std::int64_t> v) const {
    if (v.size() != static_cast<std::size_t>(dim_)) throw std::invalid_argument("vector length mismatch");
    const std::int64_t mask = (std::int64_t{1} << denom_exp_) - 1;
    std::vector<std::int64_t> out(v.size());
    for (int i = 0; i < dim_; ++i) {
        std::int64_t acc = 0;
        for (int j = 0; j < dim_; ++j) acc += numerator(i, j) * v[static_cast<std::size_t>(j)];
        if (acc & mask) return std::nullopt;
        out[static_cast<std::size_t>(i)] = acc >> denom_exp_;
    }
    return out;
}

std::string ScaledMatrix::key() const {
    bool narrow = true;
    for (auto v : num_) narrow = narrow && v >= -128 && v <= 127;
    std::string k;
    k.reserve(2 + num_.size() * (narrow ? 1 : 8));
    k.push_back(static_cast<char>(denom_exp_));
    k.push_back(narrow ? 'n' : 'w');
    for (auto v : num_) {
        if (narrow) {
            k.push_back(static_cast<char>(static_cast<std::int8_t>(v)));
        } else {
            for (int b = 0; b < 8; ++b) k.push_back(static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * b)) & 0xFF));
        }
    }
    return k;
}

}  // namespace toybit
