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

#include "toybit/linear_validity.hpp"

#include "toybit/errors.hpp"
#include "toybit/kernels.hpp"

namespace toybit {

FiniteGroup<ScaledMatrix> linear_validity_group(int n_bits) {
    if (n_bits != 1 && n_bits != 2) throw Error(ErrorKind::InvalidSupport, "n_bits must be 1 or 2");
    return FiniteGroup<ScaledMatrix>::from_elements(kernels::omp::linear_validity_search(n_bits));
}

}  // namespace toybit
