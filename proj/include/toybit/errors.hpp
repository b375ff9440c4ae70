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

#include <stdexcept>
#include <string>
#include <string_view>

namespace toybit {

enum class ErrorKind {
    InvalidSupport,
    KnowledgeBalanceViolation,
    NotInCatalog,
    DimensionMismatch,
    InvalidPartition,
    CapExceeded,
    NotASubgroup,
    NotTransitive,
    NotAxisPreserving,
    NotARotation,
    SetNotInvariant,
    UnknownClaim,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Domain error carrying the violated rule. Inconsistencies that are
/// results (an inconsistent generator map, a refuted claim) are not errors.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

}  // namespace toybit
