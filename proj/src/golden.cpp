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

#include "toybit/golden.hpp"

#include "golden_json.hpp"
#include "toybit/clifford.hpp"
#include "toybit/errors.hpp"
#include "toybit/group_algorithms.hpp"
#include "toybit/isomorphism_search.hpp"
#include "toybit/linear_validity.hpp"
#include "toybit/toy_ops.hpp"

namespace toybit {

const GoldenData &golden() {
    static const GoldenData data = golden_from_json(Json::parse(kGoldenJson));
    return data;
}

GoldenData derive_golden_data() {
    GoldenData g;
    const auto tg2 = linear_validity_group(2);
    const auto images = solve_isomorphism_images(tg2);
    g.conj_image = images.conj;
    g.p1 = images.p1;
    g.p2 = images.p2;
    g.conj_candidates = images.conj_candidates;
    g.tg2_class_count = conjugacy_classes(tg2.table()).classes.size();

    const auto spekkens = spekkens_group();
    g.p3 = solve_maximal_subgroup_generator(spekkens);
    const auto verdict = invariant_battery(spekkens, build_clifford_group(2, false));
    g.battery_stage = verdict.stage;
    if (!verdict.stages.empty()) {
        g.battery_spekkens = verdict.stages.back().first;
        g.battery_clifford = verdict.stages.back().second;
    }
    return g;
}

Json golden_to_json(const GoldenData &g) {
    auto entry = [](Json value, const char *oracle) { return Json{{"value", std::move(value)}, {"oracle", oracle}}; };
    return Json{
        {"conj_image",
         entry(to_json(g.conj_image),
               "first TG(2) element, by agreement with the printed conj image then index, that satisfies every "
               "relation of <conj, CNOT, H(x)I> together with the printed CNOT and H(x)I images and extends to an "
               "isomorphism")},
        {"conj_candidates",
         entry(g.conj_candidates, "non-identity TG(2) elements consistent with the relations of <conj, CNOT, H(x)I>")},
        {"p1", entry(to_json(g.p1), "image of H(x)H in that isomorphism: first consistent TG(2) element by index")},
        {"p2", entry(to_json(g.p2), "image of sqrtZ(x)sqrtZ: first TG(2) element completing a bijective map")},
        {"p3",
         entry(to_json(g.p3),
               "first Spekkens group element c with |<(12)(x)(23), I(x)(12), c>| = 720 and primitive coset action")},
        {"tg2_class_count", entry(g.tg2_class_count, "conjugacy classes of the searched TG(2)")},
        {"battery",
         entry(Json{{"stage", g.battery_stage}, {"spekkens", g.battery_spekkens}, {"clifford", g.battery_clifford}},
               "first differing invariant between the Spekkens group and C(2)/U(1)")},
    };
}

GoldenData golden_from_json(const Json &j) {
    try {
        GoldenData g;
        g.conj_image = matrix_from_json(j.at("conj_image").at("value"));
        g.conj_candidates = j.at("conj_candidates").at("value").get<std::size_t>();
        g.p1 = matrix_from_json(j.at("p1").at("value"));
        g.p2 = matrix_from_json(j.at("p2").at("value"));
        g.p3 = permutation_from_json(j.at("p3").at("value"));
        g.tg2_class_count = j.at("tg2_class_count").at("value").get<std::size_t>();
        const auto &b = j.at("battery").at("value");
        g.battery_stage = b.at("stage").get<std::string>();
        g.battery_spekkens = b.at("spekkens").get<std::string>();
        g.battery_clifford = b.at("clifford").get<std::string>();
        return g;
    } catch (const Json::exception &e) {
        throw Error(ErrorKind::ParseError, std::string("golden data: ") + e.what());
    }
}

}  // namespace toybit
