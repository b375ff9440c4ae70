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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toybit/clifford.hpp"
#include "toybit/epistemic.hpp"
#include "toybit/finite_group.hpp"
#include "toybit/json_io.hpp"
#include "toybit/permutation.hpp"
#include "toybit/scaled_matrix.hpp"

namespace toybit {

enum class ClaimStatus { Verified, Refuted, Inconclusive };

std::string_view to_string(ClaimStatus status);

struct ClaimReport {
    std::string claim;
    ClaimStatus status = ClaimStatus::Inconclusive;
    Json expected;           // compared with computed for equality
    std::string provenance;  // "published", "derived" or "definition"
    Json computed;
    Json witness;  // null when there is nothing to show
    double ms = 0;

    Json to_json() const;
};

/// Groups shared between claims, built on first use.
class ClaimContext {
   public:
    const FiniteGroup<ScaledMatrix> &tg1();
    /// Closure of the five toy images pinned in the golden data.
    const FiniteGroup<ScaledMatrix> &tg2();
    const FiniteGroup<Permutation> &spekkens();
    const FiniteGroup<CliffordOp> &clifford2();

   private:
    std::optional<FiniteGroup<ScaledMatrix>> tg1_;
    std::optional<FiniteGroup<ScaledMatrix>> tg2_;
    std::optional<FiniteGroup<Permutation>> spekkens_;
    std::optional<FiniteGroup<CliffordOp>> clifford2_;
};

/// First Δ in `deltas` with (Δ⊗I)(state) invalid. The default order is the
/// TG(1) closure order, which starts identity, H̃.
std::optional<ScaledMatrix> detect_perfect_correlation(const EpistemicState &state,
                                                       std::span<const ScaledMatrix> deltas);
std::optional<ScaledMatrix> detect_perfect_correlation(const EpistemicState &state);

ClaimReport verify_partitions();
ClaimReport verify_lemma1(ClaimContext &ctx);
ClaimReport verify_lemma2();
ClaimReport verify_prop1(ClaimContext &ctx);
ClaimReport verify_prop2(ClaimContext &ctx);
ClaimReport verify_nonisomorphism(ClaimContext &ctx);
ClaimReport verify_invalid_extension(ClaimContext &ctx);
ClaimReport verify_theorem2(ClaimContext &ctx);
ClaimReport verify_hypercube_geometry();

/// Registered claim ids in run order.
const std::vector<std::string> &claim_ids();

/// Runs the filtered claims (all when empty) in registry order.
/// Throws Error(UnknownClaim) for an unregistered id.
std::vector<ClaimReport> run_all(const std::vector<std::string> &filter = {});

}  // namespace toybit
