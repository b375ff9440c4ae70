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

#include "json.hpp"
#include "toybit/clifford.hpp"
#include "toybit/epistemic.hpp"
#include "toybit/measurement.hpp"
#include "toybit/permutation.hpp"
#include "toybit/scaled_matrix.hpp"

namespace toybit {

using Json = nlohmann::ordered_json;

Json to_json(const EpistemicState &state);        // {"n":..,"support":[..]}
Json to_json(const MeasurementPartition &partition);  // {"cells":[state,..]}
Json to_json(const ScaledMatrix &m);               // {"denom_exp":d,"numerators":[[..],..]}
Json to_json(const Permutation &p);                // {"images":[..]}
Json to_json(const CliffordOp &op);                // {"n":..,"antiunitary":..,"matrix":[[[a,b,c,d,k],..],..]}

// All parsers throw Error(ParseError) on malformed input and the validity
// errors of the underlying constructors otherwise.
EpistemicState state_from_json(const Json &j);
MeasurementPartition partition_from_json(const Json &j);
ScaledMatrix matrix_from_json(const Json &j);
Permutation permutation_from_json(const Json &j);

EpistemicState parse_state(const std::string &text);
MeasurementPartition parse_partition(const std::string &text);

}  // namespace toybit
