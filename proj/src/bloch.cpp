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

#include "toybit/bloch.hpp"

#include <sstream>

#include "toybit/errors.hpp"
#include "toybit/toy_ops.hpp"

namespace toybit {

SignedPerm3::SignedPerm3() : m_{1, 0, 0, 0, 1, 0, 0, 0, 1} {}

SignedPerm3::SignedPerm3(const std::array<int, 9> &entries) : m_(entries) {
    for (int r = 0; r < 3; ++r) {
        int row_nonzero = 0;
        int col_nonzero = 0;
        for (int c = 0; c < 3; ++c) {
            const int v = at(r, c);
            const int w = at(c, r);
            if (v < -1 || v > 1) throw std::invalid_argument("entries must lie in {-1,0,1}");
            row_nonzero += v != 0;
            col_nonzero += w != 0;
        }
        if (row_nonzero != 1 || col_nonzero != 1) throw std::invalid_argument("not a signed permutation matrix");
    }
}

int SignedPerm3::det() const noexcept {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

SignedPerm3 SignedPerm3::operator*(const SignedPerm3 &rhs) const {
    std::array<int, 9> out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) out[static_cast<std::size_t>(3 * i + j)] += at(i, k) * rhs.at(k, j);
    return SignedPerm3(out);
}

SignedPerm3 SignedPerm3::transpose() const {
    std::array<int, 9> out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[static_cast<std::size_t>(3 * j + i)] = at(i, j);
    return SignedPerm3(out);
}

std::string SignedPerm3::to_string() const {
    std::ostringstream out;
    out << '[';
    for (int r = 0; r < 3; ++r) {
        out << (r ? ",[" : "[") << at(r, 0) << ',' << at(r, 1) << ',' << at(r, 2) << ']';
    }
    out << ']';
    return out.str();
}

SignedPerm3 bloch_action(const Permutation &six) {
    if (six.degree() != 6) throw std::invalid_argument("expected a permutation of six states");
    std::array<int, 9> m{};
    for (int axis = 0; axis < 3; ++axis) {
        const int plus = six[static_cast<std::size_t>(2 * axis)];
        const int minus = six[static_cast<std::size_t>(2 * axis + 1)];
        if ((plus ^ 1) != minus) throw Error(ErrorKind::NotAxisPreserving, "antipodal states are not kept antipodal");
        m[static_cast<std::size_t>(3 * (plus / 2) + axis)] = plus % 2 == 0 ? 1 : -1;
    }
    return SignedPerm3(m);
}

SignedPerm3 bloch_action(const CliffordOp &op) {
    if (op.n_qubits() != 1) throw Error(ErrorKind::DimensionMismatch, "single-qubit operator expected");
    try {
        return bloch_action(projective_action_on_states(op, six_states()));
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::SetNotInvariant) throw Error(ErrorKind::NotAxisPreserving, e.what());
        throw;
    }
}

SignedPerm3 bloch_action(const ScaledMatrix &op) {
    try {
        return bloch_action(six_state_action(op));
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::SetNotInvariant) throw Error(ErrorKind::NotAxisPreserving, e.what());
        throw;
    }
}

namespace {

// cos and sin of a quarter-turn multiple
int qcos(int q) {
    static constexpr int c[] = {1, 0, -1, 0};
    return c[((q % 4) + 4) % 4];
}
int qsin(int q) {
    static constexpr int s[] = {0, 1, 0, -1};
    return s[((q % 4) + 4) % 4];
}

}  // namespace

SignedPerm3 rotation_x(int q) { return SignedPerm3({1, 0, 0, 0, qcos(q), -qsin(q), 0, qsin(q), qcos(q)}); }

SignedPerm3 rotation_z(int q) { return SignedPerm3({qcos(q), -qsin(q), 0, qsin(q), qcos(q), 0, 0, 0, 1}); }

SignedPerm3 recompose(const EulerAngles &a) {
    return (rotation_x(a.theta) * rotation_z(a.phi) * rotation_x(a.psi)).transpose();
}

EulerAngles euler_decompose(const SignedPerm3 &rotation) {
    if (rotation.det() != 1) throw Error(ErrorKind::NotARotation, "determinant is -1");
    for (int phi = -1; phi <= 2; ++phi) {
        for (int theta = 0; theta <= 2; ++theta) {
            for (int psi = -1; psi <= 2; ++psi) {
                const EulerAngles a{theta, phi, psi};
                if (recompose(a) == rotation) return a;
            }
        }
    }
    throw std::logic_error("no Euler decomposition found");
}

}  // namespace toybit
