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

#include "toybit/json_io.hpp"

#include "toybit/errors.hpp"

namespace toybit {

Json to_json(const EpistemicState &state) { return Json{{"n", state.n_bits()}, {"support", state.cells()}}; }

Json to_json(const MeasurementPartition &partition) {
    Json cells = Json::array();
    for (const auto &c : partition.cells()) cells.push_back(to_json(c));
    return Json{{"cells", std::move(cells)}};
}

Json to_json(const ScaledMatrix &m) {
    Json rows = Json::array();
    for (int r = 0; r < m.dim(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.dim(); ++c) row.push_back(m.numerator(r, c));
        rows.push_back(std::move(row));
    }
    return Json{{"denom_exp", m.denom_exp()}, {"numerators", std::move(rows)}};
}

Json to_json(const Permutation &p) {
    Json images = Json::array();
    for (auto x : p.images()) images.push_back(x);
    return Json{{"images", std::move(images)}};
}

Json to_json(const CliffordOp &op) {
    Json rows = Json::array();
    for (int r = 0; r < op.dim(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < op.dim(); ++c) {
            const auto &x = op.at(r, c);
            row.push_back({x.coeff(0), x.coeff(1), x.coeff(2), x.coeff(3), x.half_power()});
        }
        rows.push_back(std::move(row));
    }
    return Json{{"n", op.n_qubits()}, {"antiunitary", op.antiunitary()}, {"matrix", std::move(rows)}};
}

EpistemicState state_from_json(const Json &j) {
    try {
        const int n = j.at("n").get<int>();
        const auto support = j.at("support").get<std::vector<int>>();
        return make_epistemic(n, support);
    } catch (const Json::exception &e) {
        throw Error(ErrorKind::ParseError, std::string("state: ") + e.what());
    }
}

MeasurementPartition partition_from_json(const Json &j) {
    try {
        std::vector<EpistemicState> cells;
        for (const auto &c : j.at("cells")) cells.push_back(state_from_json(c));
        return MeasurementPartition(std::move(cells));
    } catch (const Json::exception &e) {
        throw Error(ErrorKind::ParseError, std::string("partition: ") + e.what());
    }
}

ScaledMatrix matrix_from_json(const Json &j) {
    try {
        std::vector<std::int64_t> nums;
        const auto &rows = j.at("numerators");
        for (const auto &row : rows)
            for (const auto &x : row) nums.push_back(x.get<std::int64_t>());
        return ScaledMatrix(static_cast<int>(rows.size()), std::move(nums), j.at("denom_exp").get<int>());
    } catch (const Json::exception &e) {
        throw Error(ErrorKind::ParseError, std::string("matrix: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw Error(ErrorKind::ParseError, std::string("matrix: ") + e.what());
    }
}

Permutation permutation_from_json(const Json &j) {
    try {
        return Permutation(j.at("images").get<std::vector<Permutation::Point>>());
    } catch (const Json::exception &e) {
        throw Error(ErrorKind::ParseError, std::string("permutation: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw Error(ErrorKind::ParseError, std::string("permutation: ") + e.what());
    }
}

namespace {

Json parse_text(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

}  // namespace

EpistemicState parse_state(const std::string &text) { return state_from_json(parse_text(text)); }

MeasurementPartition parse_partition(const std::string &text) { return partition_from_json(parse_text(text)); }

}  // namespace toybit
