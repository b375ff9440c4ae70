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

// Runs the thirteen acceptance criteria and prints one PASS/FAIL line each.
// Exit status is nonzero when any criterion fails or overruns its time limit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <unordered_set>

#include "toybit/analysis.hpp"
#include "toybit/bloch.hpp"
#include "toybit/clifford.hpp"
#include "toybit/generator_map.hpp"
#include "toybit/golden.hpp"
#include "toybit/isomorphism_search.hpp"
#include "toybit/kernels.hpp"
#include "toybit/linear_validity.hpp"
#include "toybit/measurement.hpp"
#include "toybit/set_stabilizer.hpp"
#include "toybit/toy_ops.hpp"

using namespace toybit;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

ClaimContext &ctx() {
    static ClaimContext c;
    return c;
}

const FiniteGroup<ScaledMatrix> &linear2() {
    static const auto g = linear_validity_group(2);
    return g;
}

std::unordered_set<std::string> permutation_keys(const FiniteGroup<ScaledMatrix> &g, bool only_permutations) {
    std::unordered_set<std::string> out;
    for (const auto &m : g.elements()) {
        if (auto p = m.as_permutation()) {
            out.insert(p->key());
        } else if (!only_permutations) {
            out.insert("non-permutation");
        }
    }
    return out;
}

Outcome from_claim(const ClaimReport &r) { return {r.status == ClaimStatus::Verified, r.computed.dump()}; }

Outcome c1_small_groups() {
    const auto s4 = s4_group();
    const auto a4 = a4_group();
    std::vector<std::vector<int>> supports;
    for (const auto &s : pure_states(1)) supports.push_back(s.cells());
    const auto stab = set_stabilizer(4, supports);
    const bool same = permutation_keys(s4, false) == stab.key_set();
    return {s4.order() == 24 && a4.order() == 12 && same,
            "|S4|=" + std::to_string(s4.order()) + " |A4|=" + std::to_string(a4.order()) +
                " stabilizer-equal=" + (same ? "yes" : "no")};
}

Outcome c5_spekkens() {
    const auto &spk = ctx().spekkens();
    const bool same = permutation_keys(linear2(), true) == spk.key_set();
    return {spk.order() == 11520 && same,
            "|G|=" + std::to_string(spk.order()) + " equals permutation part of linear search=" + (same ? "yes" : "no")};
}

Outcome c6_tg2() {
    const auto &closed = ctx().tg2();
    const auto &searched = linear2();
    const bool same = closed.key_set() == searched.key_set();
    return {closed.order() == 23040 && searched.order() == 23040 && same,
            "closure=" + std::to_string(closed.order()) + " search=" + std::to_string(searched.order()) +
                " identical=" + (same ? "yes" : "no")};
}

Outcome c7_extended_isomorphism() {
    const auto &g = golden();
    const auto m = map_by_generators(extended_clifford_isomorphism_source(), isomorphism_targets(g.conj_image, g.p1, g.p2));
    return {m.status == MapStatus::ConsistentIsomorphism && m.image_size == 23040,
            std::string(to_string(m.status)) + " image=" + std::to_string(m.image_size)};
}

Outcome c9_partitions() {
    const auto parts = enumerate_partitions();
    bool cells_ok = true;
    for (const auto &p : parts)
        for (const auto &c : p.cells()) cells_ok = cells_ok && c.is_pure() && is_valid_support(2, c.mask());
    return {parts.size() == 105 && cells_ok, std::to_string(parts.size()) + " partitions, cells pure=" + (cells_ok ? "yes" : "no")};
}

Outcome c10_correlation() {
    const auto sigma0 = make_epistemic(2, {0, 5, 10, 15});
    const bool h_invalid = !apply_operation(h_tilde().kron(ScaledMatrix::identity(4)), sigma0);
    std::size_t checked = 0;
    std::size_t broken = 0;
    auto inputs = mixed_catalog();
    for (const auto &s : pure_states(2))
        if (is_product_support(s.mask())) inputs.push_back(s);
    for (const auto &d : ctx().tg1().elements()) {
        const auto op = d.kron(ScaledMatrix::identity(4));
        for (const auto &s : inputs) {
            ++checked;
            broken += !apply_operation(op, s).has_value();
        }
    }
    const auto t2 = verify_theorem2(ctx());
    const bool ok = h_invalid && broken == 0 && checked == 48 * (36 + 31) && t2.status == ClaimStatus::Verified;
    return {ok, "H~(x)I sigma0 invalid=" + std::string(h_invalid ? "yes" : "no") + " broken=" + std::to_string(broken) + "/" +
                    std::to_string(checked) + " positives=" + t2.computed["positives"].dump()};
}

Outcome c11_euler() {
    const bool a = euler_decompose(bloch_action(toy_permutation("(123)(4)"))) == EulerAngles{2, -1, -1};
    const bool b = euler_decompose(bloch_action(h_tilde())) == EulerAngles{1, 1, 1};
    int rotations = 0;
    bool round_trip = true;
    for (const auto &m : ctx().tg1().elements()) {
        const auto r = bloch_action(m);
        if (r.det() != 1) continue;
        ++rotations;
        round_trip = round_trip && recompose(euler_decompose(r)) == r;
    }
    return {a && b && rotations == 24 && round_trip,
            "table=" + std::string(a && b ? "match" : "mismatch") + " rotations=" + std::to_string(rotations) +
                " round-trip=" + (round_trip ? "exact" : "broken")};
}

Outcome c12_measurement() {
    constexpr std::uint64_t kShots = 10000;
    const auto parts = enumerate_partitions();
    const auto states = pure_states(2);
    double worst = 0;
    std::uint64_t mismatches = 0;
    bool certain_ok = true;
    std::uint64_t seed = 0;
    for (const auto &s : states) {
        for (const auto &p : parts) {
            const auto r = kernels::omp::sample_outcomes(s, p, kShots, ++seed);
            mismatches += r.repeat_mismatches;
            for (std::size_t k = 0; k < p.size(); ++k) {
                const double q = boost::rational_cast<double>(outcome_probability(p.cells()[k], s));
                const double f = static_cast<double>(r.counts[k]) / kShots;
                const double sd = std::sqrt(q * (1 - q) / kShots);
                if (sd == 0) {
                    certain_ok = certain_ok && f == q;
                } else {
                    worst = std::max(worst, std::abs(f - q) / sd);
                }
            }
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "pairs=%zu max deviation=%.2f sigma repeat mismatches=%llu", states.size() * parts.size(),
                  worst, static_cast<unsigned long long>(mismatches));
    return {worst < 5 && mismatches == 0 && certain_ok, buf};
}

struct Criterion {
    int id;
    const char *name;
    double limit_s;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "small groups and one-bit stabilizer", 1, c1_small_groups},
        {2, "antipodal-preserving permutations", 1, [] { return from_claim(verify_lemma1(ctx())); }},
        {3, "axis-flip coordinates of S4", 1, [] { return from_claim(verify_lemma2()); }},
        {4, "one-qubit Clifford groups and six-point action", 1, [] { return from_claim(verify_prop1(ctx())); }},
        {5, "two-bit permutation group", 60, c5_spekkens},
        {6, "TG(2) by closure and by linear search", 120, c6_tg2},
        {7, "extended Clifford isomorphism", 120, c7_extended_isomorphism},
        {8, "non-isomorphism certificate", 120, [] { return from_claim(verify_nonisomorphism(ctx())); }},
        {9, "measurement partitions", 1, c9_partitions},
        {10, "correlation test on all states", 30, c10_correlation},
        {11, "Euler angle table", 1, c11_euler},
        {12, "seeded measurement statistics", 60, c12_measurement},
        {13, "hypercube affine planes", 1, [] { return from_claim(verify_hypercube_geometry()); }},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o{false, ""};
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = s <= c.limit_s;
        const bool pass = o.ok && in_time;
        failures += !pass;
        std::printf("%s  %2d  %-46s %7.2fs / %4.0fs  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, s, c.limit_s,
                    o.detail.c_str(), in_time ? "" : "  [over time limit]");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
