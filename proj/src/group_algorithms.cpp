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

#include "toybit/group_algorithms.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <sstream>

namespace toybit {

namespace {

constexpr std::uint32_t kNoLabel = 0xFFFFFFFFU;

template <class T>
std::string join(const std::vector<T> &values) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
    out << ']';
    return out.str();
}

std::vector<Index> generator_elements(const CayleyTable &table) {
    std::vector<Index> out;
    for (std::size_t s = 0; s < table.num_generators(); ++s) out.push_back(table.generator_element(s));
    return out;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::size_t log_base(std::size_t n, std::uint64_t p) {
    std::size_t k = 0;
    while (n > 1) {
        n /= p;
        ++k;
    }
    return k;
}

// Closure in G/N, elements represented by coset labels.
std::size_t quotient_closure_order(const CayleyTable &table, const std::vector<std::uint32_t> &labels,
                                   const std::vector<Index> &reps, std::span<const Index> gens) {
    std::vector<bool> seen(reps.size(), false);
    std::vector<std::uint32_t> queue{labels[CayleyTable::kIdentity]};
    seen[queue.front()] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
        for (Index g : gens) {
            const auto next = labels[table.multiply(reps[queue[q]], g)];
            if (!seen[next]) {
                seen[next] = true;
                queue.push_back(next);
            }
        }
    }
    return queue.size();
}

std::vector<Index> coset_representatives(const std::vector<std::uint32_t> &labels) {
    std::vector<Index> reps;
    for (Index x = 0; x < labels.size(); ++x) {
        if (labels[x] == reps.size()) reps.push_back(x);
    }
    return reps;
}

}  // namespace

Subgroup::Subgroup(std::size_t group_order, std::vector<Index> elements)
    : elements_(std::move(elements)), member_(group_order, false) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    for (Index i : elements_) member_[i] = true;
}

std::map<int, std::size_t> element_order_histogram(const CayleyTable &table) {
    std::map<int, std::size_t> out;
    for (Index i = 0; i < table.order(); ++i) ++out[table.element_order(i)];
    return out;
}

ClassPartition conjugacy_classes(const CayleyTable &table) {
    ClassPartition out;
    out.class_of.assign(table.order(), kNoLabel);
    const auto gens = generator_elements(table);
    for (Index x = 0; x < table.order(); ++x) {
        if (out.class_of[x] != kNoLabel) continue;
        const auto id = static_cast<std::uint32_t>(out.classes.size());
        std::vector<Index> orbit{x};
        out.class_of[x] = id;
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            for (Index g : gens) {
                const Index y = table.conjugate(orbit[k], g);
                if (out.class_of[y] == kNoLabel) {
                    out.class_of[y] = id;
                    orbit.push_back(y);
                }
            }
        }
        out.classes.push_back({x, orbit.size()});
    }
    return out;
}

std::vector<std::size_t> class_sizes(const ClassPartition &classes) {
    std::vector<std::size_t> out;
    for (const auto &c : classes.classes) out.push_back(c.size);
    std::sort(out.begin(), out.end());
    return out;
}

Subgroup subgroup_closure(const CayleyTable &table, std::span<const Index> generators) {
    std::vector<bool> seen(table.order(), false);
    std::vector<Index> elems{CayleyTable::kIdentity};
    seen[CayleyTable::kIdentity] = true;
    for (std::size_t k = 0; k < elems.size(); ++k) {
        for (Index g : generators) {
            const Index y = table.multiply(elems[k], g);
            if (!seen[y]) {
                seen[y] = true;
                elems.push_back(y);
            }
        }
    }
    return Subgroup(table.order(), std::move(elems));
}

std::size_t bounded_closure_order(const CayleyTable &table, std::span<const Index> generators, std::size_t bound) {
    std::vector<bool> seen(table.order(), false);
    std::vector<Index> elems{CayleyTable::kIdentity};
    seen[CayleyTable::kIdentity] = true;
    for (std::size_t k = 0; k < elems.size(); ++k) {
        for (Index g : generators) {
            const Index y = table.multiply(elems[k], g);
            if (seen[y]) continue;
            seen[y] = true;
            elems.push_back(y);
            if (elems.size() > bound) return bound + 1;
        }
    }
    return elems.size();
}

Subgroup center(const CayleyTable &table) {
    const auto gens = generator_elements(table);
    std::vector<Index> out;
    for (Index z = 0; z < table.order(); ++z) {
        bool central = true;
        for (Index g : gens) {
            if (table.multiply(z, g) != table.multiply(g, z)) {
                central = false;
                break;
            }
        }
        if (central) out.push_back(z);
    }
    return Subgroup(table.order(), std::move(out));
}

Subgroup normal_closure(const CayleyTable &table, std::span<const Index> seeds) {
    std::vector<Index> gens;
    for (Index s : seeds) {
        if (s != CayleyTable::kIdentity) gens.push_back(s);
    }
    auto sub = subgroup_closure(table, gens);
    const auto group_gens = generator_elements(table);
    for (bool changed = true; changed;) {
        changed = false;
        for (Index g : group_gens) {
            for (std::size_t k = 0; k < gens.size(); ++k) {
                const Index c = table.conjugate(gens[k], g);
                if (sub.contains(c)) continue;
                gens.push_back(c);
                sub = subgroup_closure(table, gens);
                changed = true;
            }
        }
    }
    return sub;
}

Subgroup derived_subgroup(const CayleyTable &table) {
    const auto gens = generator_elements(table);
    std::vector<Index> commutators;
    for (Index a : gens) {
        for (Index b : gens) {
            const Index ab = table.multiply(a, b);
            commutators.push_back(table.multiply(ab, table.inverse(table.multiply(b, a))));
        }
    }
    return normal_closure(table, commutators);
}

std::vector<std::uint32_t> left_coset_labels(const CayleyTable &table, const Subgroup &h) {
    std::vector<std::uint32_t> labels(table.order(), kNoLabel);
    std::uint32_t next = 0;
    for (Index x = 0; x < table.order(); ++x) {
        if (labels[x] != kNoLabel) continue;
        for (Index y : h.elements()) labels[table.multiply(x, y)] = next;
        ++next;
    }
    return labels;
}

std::vector<std::uint64_t> abelian_invariants(const CayleyTable &table) {
    const auto derived = derived_subgroup(table);
    const auto labels = left_coset_labels(table, derived);
    const auto reps = coset_representatives(labels);
    std::vector<std::uint64_t> orders;
    for (Index r : reps) {
        std::uint64_t k = 1;
        for (Index cur = r; !derived.contains(cur); cur = table.multiply(cur, r)) ++k;
        orders.push_back(k);
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t p : prime_factors(reps.size())) {
        // f[k] = number of cyclic factors of exponent >= k in the p-part.
        std::vector<std::size_t> logs{0};
        for (std::uint64_t pk = p;; pk *= p) {
            std::size_t count = 0;
            for (auto o : orders) count += (is_power_of(o, p) && pk % o == 0) ? 1 : 0;
            logs.push_back(log_base(count, p));
            if (logs.back() == logs[logs.size() - 2]) break;
        }
        std::uint64_t pk = 1;
        for (std::size_t k = 1; k + 1 < logs.size(); ++k) {
            pk *= p;
            const std::size_t at_least_k = logs[k] - logs[k - 1];
            const std::size_t at_least_next = logs[k + 1] - logs[k];
            for (std::size_t r = 0; r < at_least_k - at_least_next; ++r) out.push_back(pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Subgroup sylow_subgroup(const CayleyTable &table, std::uint64_t p) {
    std::size_t target = 1;
    while (table.order() % (target * p) == 0) target *= p;
    std::vector<Index> gens;
    Subgroup sub(table.order(), {CayleyTable::kIdentity});
    // A p-element outside P that normalizes P always extends P to a larger
    // p-subgroup, and one exists until P is Sylow.
    while (sub.order() < target) {
        bool grew = false;
        for (Index x = 1; x < table.order() && !grew; ++x) {
            if (sub.contains(x) || !is_power_of(static_cast<std::uint64_t>(table.element_order(x)), p)) continue;
            const bool normalizes = std::all_of(gens.begin(), gens.end(),
                                                [&](Index h) { return sub.contains(table.conjugate(h, x)); });
            if (!normalizes) continue;
            gens.push_back(x);
            sub = subgroup_closure(table, gens);
            grew = true;
        }
        if (!grew) throw std::logic_error("Sylow search stalled");
    }
    return sub;
}

Subgroup p_core(const CayleyTable &table, std::uint64_t p) {
    const auto sylow = sylow_subgroup(table, p);
    const auto classes = conjugacy_classes(table);
    std::vector<std::size_t> inside(classes.classes.size(), 0);
    for (Index x : sylow.elements()) ++inside[classes.class_of[x]];
    std::vector<Index> out;
    for (Index x = 0; x < table.order(); ++x) {
        const auto c = classes.class_of[x];
        if (inside[c] == classes.classes[c].size) out.push_back(x);
    }
    return Subgroup(table.order(), std::move(out));
}

std::uint64_t complement_count(const CayleyTable &table, const Subgroup &normal) {
    const std::size_t q = table.order() / normal.order();
    if (q == 1) return 1;
    const auto labels = left_coset_labels(table, normal);
    const auto reps = coset_representatives(labels);

    // Quotient generators: a single element, else the first generating pair,
    // else a greedy list.
    std::vector<Index> qgens;
    for (std::size_t i = 1; i < reps.size() && qgens.empty(); ++i) {
        const Index one[] = {reps[i]};
        if (quotient_closure_order(table, labels, reps, one) == q) qgens = {reps[i]};
    }
    for (std::size_t i = 1; i < reps.size() && qgens.empty(); ++i) {
        for (std::size_t j = i + 1; j < reps.size() && qgens.empty(); ++j) {
            const Index two[] = {reps[i], reps[j]};
            if (quotient_closure_order(table, labels, reps, two) == q) qgens = {reps[i], reps[j]};
        }
    }
    if (qgens.empty()) {
        std::size_t reached = 1;
        for (std::size_t i = 1; i < reps.size() && reached < q; ++i) {
            qgens.push_back(reps[i]);
            const auto order = quotient_closure_order(table, labels, reps, qgens);
            if (order == reached) {
                qgens.pop_back();
            } else {
                reached = order;
            }
        }
    }

    // A complement meets each quotient-generator coset exactly once, so it is
    // counted once among the lift tuples.
    const auto &n = normal.elements();
    std::vector<std::size_t> choice(qgens.size(), 0);
    std::vector<Index> lifts(qgens.size());
    std::uint64_t count = 0;
    for (;;) {
        for (std::size_t k = 0; k < qgens.size(); ++k) lifts[k] = table.multiply(qgens[k], n[choice[k]]);
        if (bounded_closure_order(table, lifts, q) == q) ++count;
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == n.size()) choice[k++] = 0;
        if (k == choice.size()) break;
    }
    return count;
}

std::string format_histogram(const std::map<int, std::size_t> &histogram) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto &[order, count] : histogram) {
        out << (first ? "" : ", ") << order << ':' << count;
        first = false;
    }
    out << '}';
    return out.str();
}

BatteryVerdict invariant_battery(const CayleyTable &a, const CayleyTable &b) {
    using Stage = std::pair<const char *, std::string (*)(const CayleyTable &)>;
    static const Stage stages[] = {
        {"order", [](const CayleyTable &t) { return std::to_string(t.order()); }},
        {"element order histogram", [](const CayleyTable &t) { return format_histogram(element_order_histogram(t)); }},
        {"class sizes", [](const CayleyTable &t) { return join(class_sizes(conjugacy_classes(t))); }},
        {"center order", [](const CayleyTable &t) { return std::to_string(center(t).order()); }},
        {"derived subgroup order", [](const CayleyTable &t) { return std::to_string(derived_subgroup(t).order()); }},
        {"abelianization", [](const CayleyTable &t) { return join(abelian_invariants(t)); }},
        {"complements of O_2",
         [](const CayleyTable &t) {
             const auto core = p_core(t, 2);
             return "|O_2|=" + std::to_string(core.order()) + " complements=" +
                    std::to_string(complement_count(t, core));
         }},
    };
    BatteryVerdict verdict;
    for (const auto &[name, compute] : stages) {
        verdict.stages.push_back({name, compute(a), compute(b)});
        if (verdict.stages.back().first != verdict.stages.back().second) {
            verdict.distinguished = true;
            verdict.stage = name;
            break;
        }
    }
    return verdict;
}

std::vector<Permutation> coset_action_generators(const CayleyTable &table, const Subgroup &h) {
    const auto labels = left_coset_labels(table, h);
    const auto reps = coset_representatives(labels);
    std::vector<Permutation> out;
    for (std::size_t s = 0; s < table.num_generators(); ++s) {
        const Index g = table.generator_element(s);
        std::vector<Permutation::Point> img(reps.size());
        for (std::size_t c = 0; c < reps.size(); ++c) {
            img[c] = static_cast<Permutation::Point>(labels[table.multiply(g, reps[c])]);
        }
        out.emplace_back(std::move(img));
    }
    return out;
}

Primitivity is_primitive(std::span<const Permutation> generators) {
    if (generators.empty()) throw std::invalid_argument("no generators");
    const std::size_t n = generators.front().degree();
    std::vector<bool> reached(n, false);
    std::vector<std::size_t> orbit{0};
    reached[0] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (const auto &g : generators) {
            const std::size_t y = g[orbit[k]];
            if (!reached[y]) {
                reached[y] = true;
                orbit.push_back(y);
            }
        }
    }
    if (orbit.size() != n) throw Error(ErrorKind::NotTransitive, "action is not transitive");

    Primitivity out{true, {}};
    std::vector<std::size_t> parent(n);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t b = 1; b < n; ++b) {
        // Smallest block containing 0 and b: close the pair relation under the generators.
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        std::deque<std::pair<std::size_t, std::size_t>> pending{{0, b}};
        parent[b] = 0;
        while (!pending.empty()) {
            const auto [x, y] = pending.front();
            pending.pop_front();
            for (const auto &g : generators) {
                const std::size_t rx = find(g[x]);
                const std::size_t ry = find(g[y]);
                if (rx == ry) continue;
                parent[std::max(rx, ry)] = std::min(rx, ry);
                pending.emplace_back(g[x], g[y]);
            }
        }
        std::vector<Permutation::Point> block;
        for (std::size_t x = 0; x < n; ++x) {
            if (find(x) == find(0)) block.push_back(static_cast<Permutation::Point>(x));
        }
        if (block.size() < n && (out.primitive || block.size() < out.block.size())) {
            out.primitive = false;
            out.block = std::move(block);
        }
    }
    return out;
}

}  // namespace toybit
