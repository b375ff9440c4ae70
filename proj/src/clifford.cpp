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

#include "toybit/clifford.hpp"

#include <stdexcept>
#include <unordered_map>

#include "toybit/errors.hpp"

namespace toybit {

namespace {

void append_scalar(std::string &out, const Cyclotomic &x) {
    for (auto c : x.coeffs()) {
        for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((static_cast<std::uint64_t>(c) >> (8 * b)) & 0xFF));
    }
    out.push_back(static_cast<char>(x.half_power()));
}

std::string canonical_bytes(const std::vector<Cyclotomic> &entries, char tag) {
    std::string out(1, tag);
    out.reserve(1 + entries.size() * 17);
    Cyclotomic scale;
    for (const auto &e : entries) {
        if (!e.is_zero()) {
            scale = e.conj();
            break;
        }
    }
    for (const auto &e : entries) append_scalar(out, e * scale);
    return out;
}

}  // namespace

CliffordOp::CliffordOp(int n_qubits, std::vector<Cyclotomic> matrix, bool antiunitary)
    : n_(n_qubits), anti_(antiunitary), m_(std::move(matrix)) {
    if (n_qubits < 1 || n_qubits > 2) throw std::invalid_argument("only one or two qubits are supported");
    if (m_.size() != static_cast<std::size_t>(dim() * dim())) throw std::invalid_argument("matrix size mismatch");
}

CliffordOp CliffordOp::identity(int n_qubits) {
    const int d = 1 << n_qubits;
    std::vector<Cyclotomic> m(static_cast<std::size_t>(d * d));
    for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i * d + i)] = Cyclotomic(1, 0, 0, 0);
    return CliffordOp(n_qubits, std::move(m));
}

CliffordOp CliffordOp::operator*(const CliffordOp &rhs) const {
    if (rhs.n_ != n_) throw std::invalid_argument("qubit count mismatch");
    const int d = dim();
    std::vector<Cyclotomic> out(static_cast<std::size_t>(d * d));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            Cyclotomic acc;
            for (int k = 0; k < d; ++k) {
                const auto &a = at(i, k);
                if (a.is_zero()) continue;
                acc = acc + a * (anti_ ? rhs.at(k, j).conj() : rhs.at(k, j));
            }
            out[static_cast<std::size_t>(i * d + j)] = acc;
        }
    }
    return CliffordOp(n_, std::move(out), anti_ != rhs.anti_);
}

CliffordOp CliffordOp::kron(const CliffordOp &rhs) const {
    if (n_ + rhs.n_ > 2) throw std::invalid_argument("only one or two qubits are supported");
    if (anti_ != rhs.anti_) throw std::invalid_argument("tensor factors must agree on conjugation");
    const int da = dim();
    const int db = rhs.dim();
    const int d = da * db;
    std::vector<Cyclotomic> out(static_cast<std::size_t>(d * d));
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
            for (int k = 0; k < db; ++k)
                for (int l = 0; l < db; ++l)
                    out[static_cast<std::size_t>((i * db + k) * d + j * db + l)] = at(i, j) * rhs.at(k, l);
    return CliffordOp(n_ + rhs.n_, std::move(out), anti_);
}

bool CliffordOp::is_unitary() const {
    const int d = dim();
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            Cyclotomic acc;
            for (int k = 0; k < d; ++k) acc = acc + at(i, k) * at(j, k).conj();
            if (acc != (i == j ? Cyclotomic(1, 0, 0, 0) : Cyclotomic())) return false;
        }
    }
    return true;
}

StateVector CliffordOp::apply(const StateVector &v) const {
    if (v.size() != static_cast<std::size_t>(dim())) throw std::invalid_argument("vector length mismatch");
    StateVector out(v.size());
    for (int i = 0; i < dim(); ++i) {
        Cyclotomic acc;
        for (int k = 0; k < dim(); ++k) acc = acc + at(i, k) * (anti_ ? v[static_cast<std::size_t>(k)].conj() : v[static_cast<std::size_t>(k)]);
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

std::string CliffordOp::key() const { return canonical_bytes(m_, anti_ ? 'A' : 'U'); }

std::string projective_key(const StateVector &v) { return canonical_bytes(v, 'v'); }

namespace gates {

CliffordOp identity(int n_qubits) { return CliffordOp::identity(n_qubits); }

CliffordOp h() {
    const Cyclotomic p(1, 0, 0, 0, 1);
    return CliffordOp(1, {p, p, p, -p});
}

CliffordOp sqrt_z() {
    return CliffordOp(1, {Cyclotomic(1, 0, 0, 0), Cyclotomic(), Cyclotomic(), Cyclotomic::zeta_power(2)});
}

CliffordOp cnot() {
    std::vector<Cyclotomic> m(16);
    const Cyclotomic one(1, 0, 0, 0);
    m[0 * 4 + 0] = one;
    m[1 * 4 + 1] = one;
    m[2 * 4 + 3] = one;
    m[3 * 4 + 2] = one;
    return CliffordOp(2, std::move(m));
}

CliffordOp conj(int n_qubits) {
    auto id = CliffordOp::identity(n_qubits);
    return CliffordOp(n_qubits, id.matrix(), true);
}

}  // namespace gates

FiniteGroup<CliffordOp> build_clifford_group(int n_qubits, bool extended) {
    std::vector<CliffordOp> gens;
    if (n_qubits == 1) {
        gens = {gates::h(), gates::sqrt_z()};
    } else if (n_qubits == 2) {
        const auto id = gates::identity(1);
        gens = {gates::sqrt_z().kron(id), id.kron(gates::sqrt_z()), gates::h().kron(id), id.kron(gates::h()),
                gates::cnot()};
    } else {
        throw std::invalid_argument("only one or two qubits are supported");
    }
    if (extended) gens.push_back(gates::conj(n_qubits));
    return FiniteGroup<CliffordOp>::closure(std::move(gens));
}

FiniteGroup<CliffordOp> extended_clifford_isomorphism_source() {
    const auto id = gates::identity(1);
    return FiniteGroup<CliffordOp>::closure({gates::conj(2), gates::cnot(), gates::h().kron(id),
                                             gates::h().kron(gates::h()), gates::sqrt_z().kron(gates::sqrt_z())});
}

std::vector<StateVector> six_states() {
    const Cyclotomic r(1, 0, 0, 0, 1);  // 1/√2
    const Cyclotomic i = Cyclotomic::zeta_power(2);
    const Cyclotomic one(1, 0, 0, 0);
    const Cyclotomic zero;
    return {{r, r}, {r, -r}, {r, r * i}, {r, -(r * i)}, {one, zero}, {zero, one}};
}

Permutation projective_action_on_states(const CliffordOp &op, const std::vector<StateVector> &states) {
    std::unordered_map<std::string, Permutation::Point> index;
    for (std::size_t k = 0; k < states.size(); ++k) {
        if (!index.emplace(projective_key(states[k]), static_cast<Permutation::Point>(k)).second) {
            throw std::invalid_argument("states are not projectively distinct");
        }
    }
    std::vector<Permutation::Point> img(states.size());
    for (std::size_t k = 0; k < states.size(); ++k) {
        auto it = index.find(projective_key(op.apply(states[k])));
        if (it == index.end()) throw Error(ErrorKind::SetNotInvariant, "image of state " + std::to_string(k) + " is outside the set");
        img[k] = it->second;
    }
    return Permutation(std::move(img));
}

}  // namespace toybit
