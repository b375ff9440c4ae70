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

#include "toybit/errors.hpp"

namespace toybit {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidSupport: return "InvalidSupport";
        case ErrorKind::KnowledgeBalanceViolation: return "KnowledgeBalanceViolation";
        case ErrorKind::NotInCatalog: return "NotInCatalog";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::InvalidPartition: return "InvalidPartition";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::NotASubgroup: return "NotASubgroup";
        case ErrorKind::NotTransitive: return "NotTransitive";
        case ErrorKind::NotAxisPreserving: return "NotAxisPreserving";
        case ErrorKind::NotARotation: return "NotARotation";
        case ErrorKind::SetNotInvariant: return "SetNotInvariant";
        case ErrorKind::UnknownClaim: return "UnknownClaim";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace toybit
