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
#include <string>

#include "toybit/clifford.hpp"
#include "toybit/permutation.hpp"
#include "toybit/scaled_matrix.hpp"

namespace toybit {

/// 3x3 signed permutation matrix on the axes x, y, z (row-major).
class SignedPerm3 {
   public:
    SignedPerm3();  // identity
    explicit SignedPerm3(const std::array<int, 9> &entries);

    int at(int row, int col) const noexcept { return m_[static_cast<std::size_t>(3 * row + col)]; }
    const std::array<int, 9> &entries() const noexcept { return m_; }
    int det() const noexcept;

    SignedPerm3 operator*(const SignedPerm3 &rhs) const;
    SignedPerm3 transpose() const;
    bool operator==(const SignedPerm3 &) const = default;

    std::string to_string() const;

   private:
    std::array<int, 9> m_;
};

/// Active action on the axes from a permutation of the six pure states listed
/// as +x, -x, +y, -y, +z, -z. Throws Error(NotAxisPreserving).
SignedPerm3 bloch_action(const Permutation &six_state_permutation);
SignedPerm3 bloch_action(const CliffordOp &single_qubit_op);
SignedPerm3 bloch_action(const ScaledMatrix &toy_op);

/// Quarter turns.
struct EulerAngles {
    int theta;
    int phi;
    int psi;
    bool operator==(const EulerAngles &) const = default;
};

SignedPerm3 rotation_x(int quarter_turns);
SignedPerm3 rotation_z(int quarter_turns);

/// The axis action of R_x(θ)R_z(φ)R_x(ψ) read as clockwise turns, i.e. the
/// transpose of the right-handed product.
SignedPerm3 recompose(const EulerAngles &angles);

/// θ ∈ {0,1,2}, φ,ψ ∈ {-1,0,1,2}; among solutions the smallest (φ, θ, ψ)
/// lexicographically. Throws Error(NotARotation) when det = -1.
EulerAngles euler_decompose(const SignedPerm3 &rotation);

}  // namespace toybit
