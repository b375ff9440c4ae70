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

#include "toybit/finite_group.hpp"
#include "toybit/scaled_matrix.hpp"

namespace toybit {

/// Orthogonal linear maps permuting the pure-state indicator vectors,
/// found by search (not by closure). Uses the parallel kernel.
FiniteGroup<ScaledMatrix> linear_validity_group(int n_bits);

}  // namespace toybit
