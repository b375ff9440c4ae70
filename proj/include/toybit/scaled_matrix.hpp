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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toybit/epistemic.hpp"
#include "toybit/permutation.hpp"

namespace toybit {

/// Square matrix with entries k / 2^d: integer numerators plus one shared
/// denominator exponent, kept minimal. Toy operations live in this ring.
class ScaledMatrix {
   public:
    ScaledMatrix() = default;
    ScaledMatrix(int dim, std::vector<std::int64_t> numerators, int denom_exp = 0);

    static ScaledMatrix identity(int dim);
    /// Column j holds the basis vector of p(j).
    static ScaledMatrix from_permutation(const Permutation &p);

    int dim() const noexcept { return dim_; }
    int denom_exp() const noexcept { return denom_exp_; }
    std::int64_t numerator(int row, int col) const { return num_[static_cast<std::size_t>(row * dim_ + col)]; }
    std::span<const std::int64_t> numerators() const noexcept { return num_; }
    Rational at(int row, int col) const;

    ScaledMatrix operator*(const ScaledMatrix &rhs) const;
    ScaledMatrix transpose() const;
    ScaledMatrix identity() const { return identity(dim_); }
    ScaledMatrix kron(const ScaledMatrix &rhs) const;
    bool is_orthogonal() const;
    bool is_permutation_matrix() const;
    std::optional<Permutation> as_permutation() const;

    /// M v scaled back to integers; nullopt when some entry is fractional.
    std::optional<std::vector<std::int64_t>> apply(std::span<const std::int64_t> v) const;

    std::string key() const;
    bool operator==(const ScaledMatrix &) const = default;

   private:
    void normalize();

    int dim_ = 0;
    int denom_exp_ = 0;
    std::vector<std::int64_t> num_;
};

}  // namespace toybit
