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

#include <string>
#include <vector>

#include "toybit/cyclotomic.hpp"
#include "toybit/finite_group.hpp"
#include "toybit/permutation.hpp"

namespace toybit {

using StateVector = std::vector<Cyclotomic>;

/// Unitary matrix optionally followed by complex conjugation: (M, f) acts as
/// v -> M σ^f(v). Keys identify operators up to a global phase.
class CliffordOp {
   public:
    CliffordOp() = default;
    CliffordOp(int n_qubits, std::vector<Cyclotomic> matrix, bool antiunitary = false);

    static CliffordOp identity(int n_qubits);

    int n_qubits() const noexcept { return n_; }
    int dim() const noexcept { return 1 << n_; }
    bool antiunitary() const noexcept { return anti_; }
    const Cyclotomic &at(int row, int col) const { return m_[static_cast<std::size_t>(row * dim() + col)]; }
    const std::vector<Cyclotomic> &matrix() const noexcept { return m_; }

    CliffordOp operator*(const CliffordOp &rhs) const;
    CliffordOp identity() const { return identity(n_); }
    CliffordOp kron(const CliffordOp &rhs) const;
    bool is_unitary() const;

    StateVector apply(const StateVector &v) const;

    /// Matrix multiplied by the conjugate of its first nonzero entry, so any
    /// unit-modulus multiple maps to the same string.
    std::string key() const;

    /// Exact equality of matrix and flag (not projective).
    bool operator==(const CliffordOp &) const = default;

   private:
    int n_ = 0;
    bool anti_ = false;
    std::vector<Cyclotomic> m_;
};

/// Projective key of a vector, as for CliffordOp::key().
std::string projective_key(const StateVector &v);

namespace gates {
CliffordOp h();
CliffordOp sqrt_z();
CliffordOp cnot();  // first qubit controls
CliffordOp conj(int n_qubits);
CliffordOp identity(int n_qubits);
}  // namespace gates

/// C(n)/U(1), or EC(n)/U(1) when extended.
FiniteGroup<CliffordOp> build_clifford_group(int n_qubits, bool extended);

/// EC(2)/U(1) generated in the order conj, CNOT, H⊗I, H⊗H, √Z⊗√Z.
FiniteGroup<CliffordOp> extended_clifford_isomorphism_source();

/// |+>, |->, |i>, |-i>, |0>, |1>
std::vector<StateVector> six_states();

/// Induced permutation of list indices; throws Error(SetNotInvariant).
Permutation projective_action_on_states(const CliffordOp &op, const std::vector<StateVector> &states);

}  // namespace toybit
