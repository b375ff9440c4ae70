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

#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "toybit/analysis.hpp"
#include "toybit/bloch.hpp"
#include "toybit/clifford.hpp"
#include "toybit/golden.hpp"
#include "toybit/group_algorithms.hpp"
#include "toybit/isomorphism_search.hpp"
#include "toybit/json_io.hpp"
#include "toybit/kernels.hpp"
#include "toybit/measurement.hpp"
#include "toybit/toy_ops.hpp"

namespace toybit::cli {
namespace {

// Thrown for bad input after parsing; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using AnyGroup = std::variant<FiniteGroup<ScaledMatrix>, FiniteGroup<Permutation>, FiniteGroup<CliffordOp>>;

const std::vector<std::string> kGroupNames{"s4", "a4", "tg1", "tg2", "spekkens2", "c1", "ec1", "c2", "ec2"};

AnyGroup build_group(const std::string &name) {
    if (name == "s4") return s4_group();
    if (name == "a4") return a4_group();
    if (name == "tg1") return tg1_group();
    if (name == "tg2") {
        const auto &g = golden();
        return FiniteGroup<ScaledMatrix>::closure(isomorphism_targets(g.conj_image, g.p1, g.p2));
    }
    if (name == "spekkens2") return spekkens_group();
    if (name == "c1") return build_clifford_group(1, false);
    if (name == "ec1") return build_clifford_group(1, true);
    if (name == "c2") return build_clifford_group(2, false);
    if (name == "ec2") return build_clifford_group(2, true);
    throw UsageError("unknown group: " + name);
}

const CayleyTable &table_of(const AnyGroup &g) {
    return std::visit([](const auto &grp) -> const CayleyTable & { return grp.table(); }, g);
}

Json generators_of(const AnyGroup &g) {
    return std::visit(
        [](const auto &grp) {
            Json gens = Json::array();
            for (const auto &e : grp.generators()) gens.push_back(to_json(e));
            return gens;
        },
        g);
}

std::uint64_t default_seed() {
    if (const char *env = std::getenv("TOYBIT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception &) {
            throw UsageError(std::string("TOYBIT_SEED is not an unsigned integer: ") + env);
        }
    }
    return 0;
}

// Writes to --out when given, else to out.
void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    file << text;
    if (!file) throw UsageError("cannot write " + path);
}

std::string angle_text(int quarter_turns) {
    switch (quarter_turns) {
        case 0:
            return "0";
        case 1:
            return "π/2";
        case -1:
            return "-π/2";
        case 2:
            return "π";
        case -2:
            return "-π";
        default:
            return std::to_string(quarter_turns) + "π/2";
    }
}

std::string describe_toy_operation(const ScaledMatrix &m) {
    if (m == h_tilde()) return "H̃";
    if (m == sqrt_z_tilde()) return "√Z̃";
    if (auto p = m.as_permutation()) return p->to_cycles();
    return to_json(m).dump();
}

std::string cells_text(const EpistemicState &s) {
    std::string out = "{";
    for (int c : s.cells()) out += (out.size() > 1 ? "," : "") + std::to_string(c);
    return out + "}";
}

// ---- subcommands ----

struct VerifyOptions {
    bool all = false;
    std::vector<std::string> claims;
    std::string format = "text";
    std::string out;
};

int run_verify(const VerifyOptions &o, std::ostream &out) {
    const auto reports = run_all(o.all ? std::vector<std::string>{} : o.claims);
    bool ok = true;
    std::ostringstream text;
    if (o.format == "json") {
        Json arr = Json::array();
        for (const auto &r : reports) arr.push_back(r.to_json());
        text << arr.dump(2) << "\n";
    } else {
        for (const auto &r : reports) {
            text << std::left << std::setw(18) << r.claim << std::setw(13) << to_string(r.status) << std::right
                 << std::fixed << std::setprecision(1) << std::setw(9) << r.ms << " ms  " << r.computed.dump() << "\n";
            if (r.status != ClaimStatus::Verified) text << "  witness: " << r.witness.dump() << "\n";
        }
    }
    for (const auto &r : reports) ok = ok && r.status == ClaimStatus::Verified;
    emit(text.str(), o.out, out);
    return ok ? 0 : 1;
}

struct EnumerateOptions {
    std::string group;
    bool histogram = false;
    bool classes = false;
    std::string out;
};

int run_enumerate(const EnumerateOptions &o, std::ostream &out) {
    const auto g = build_group(o.group);
    const auto &table = table_of(g);
    Json j{{"group", o.group}, {"order", table.order()}, {"generators", generators_of(g)}};
    if (o.histogram) {
        Json h = Json::object();
        for (const auto &[order, count] : element_order_histogram(table)) h[std::to_string(order)] = count;
        j["element_order_histogram"] = h;
    }
    if (o.classes) j["class_sizes"] = class_sizes(conjugacy_classes(table));
    emit(j.dump(2) + "\n", o.out, out);
    return 0;
}

struct MeasureOptions {
    std::string state;
    std::string partition;
    std::uint64_t shots = 10000;
    std::optional<std::uint64_t> seed;
};

int run_measure(const MeasureOptions &o, std::ostream &out) {
    const auto state = parse_state(o.state);
    const auto partition = parse_partition(o.partition);
    if (state.n_bits() != partition.n_bits()) throw UsageError("state and partition have different sizes");
    const auto seed = o.seed ? *o.seed : default_seed();
    const auto result = kernels::omp::sample_outcomes(state, partition, o.shots, seed);

    out << "shots " << o.shots << "  seed " << seed << "\n";
    out << "outcome  cell                   exact   empirical     sigma\n";
    for (std::size_t k = 0; k < partition.size(); ++k) {
        const auto p = outcome_probability(partition.cells()[k], state);
        const double exact = boost::rational_cast<double>(p);
        const double freq = o.shots ? static_cast<double>(result.counts[k]) / static_cast<double>(o.shots) : 0.0;
        const double sd = o.shots ? std::sqrt(exact * (1 - exact) / static_cast<double>(o.shots)) : 0.0;
        std::ostringstream exact_text;
        exact_text << p.numerator() << "/" << p.denominator();
        std::string sigma = "0.00";
        if (sd > 0) {
            std::ostringstream s;
            s << std::fixed << std::setprecision(2) << (freq - exact) / sd;
            sigma = s.str();
        } else if (freq != exact) {
            sigma = "inf";
        }
        out << std::left << std::setw(9) << k << std::setw(20) << cells_text(partition.cells()[k]) << std::right
            << std::setw(8) << exact_text.str() << std::fixed << std::setprecision(4) << std::setw(12) << freq
            << std::setw(10) << sigma << "\n";
    }
    out << "repeat mismatches " << result.repeat_mismatches << "\n";
    return 0;
}

int run_correlate(const std::string &state_json, std::ostream &out) {
    const auto state = parse_state(state_json);
    if (state.n_bits() != 2) throw UsageError("correlation test needs a two-bit state");
    if (const auto w = detect_perfect_correlation(state)) {
        out << "perfectly correlated; witness: " << describe_toy_operation(*w) << "⊗I\n";
    } else {
        out << "not perfectly correlated\n";
    }
    return 0;
}

int run_euler(const std::string &cycles, std::ostream &out) {
    ScaledMatrix m;
    try {
        m = toy_permutation(cycles);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string("bad cycles: ") + e.what());
    }
    const auto r = bloch_action(m);
    const auto a = euler_decompose(r);
    out << "bloch " << r.to_string() << "\n";
    out << "theta " << angle_text(a.theta) << "  phi " << angle_text(a.phi) << "  psi " << angle_text(a.psi) << "\n";
    return 0;
}

struct ExportOptions {
    std::string what;
    std::string group;
    std::string format = "json";
    std::string out;
};

std::string export_states(const std::string &format) {
    std::vector<std::pair<std::string, EpistemicState>> rows;
    for (int n : {1, 2})
        for (const auto &s : pure_states(n)) rows.emplace_back("pure", s);
    for (const auto &s : mixed_catalog()) rows.emplace_back("mixed", s);
    if (format == "json") {
        Json arr = Json::array();
        for (const auto &[kind, s] : rows) {
            auto j = to_json(s);
            j["kind"] = kind;
            arr.push_back(j);
        }
        return arr.dump(2) + "\n";
    }
    if (format != "csv") throw UsageError("states export supports json and csv");
    std::string text = "n,kind,support\n";
    for (const auto &[kind, s] : rows) {
        std::string cells;
        for (int c : s.cells()) cells += (cells.empty() ? "" : " ") + std::to_string(c);
        text += std::to_string(s.n_bits()) + "," + kind + "," + cells + "\n";
    }
    return text;
}

std::string export_partitions(const std::string &format) {
    const auto parts = enumerate_partitions();
    if (format == "json") {
        Json arr = Json::array();
        for (const auto &p : parts) arr.push_back(to_json(p));
        return arr.dump(2) + "\n";
    }
    if (format != "csv") throw UsageError("partitions export supports json and csv");
    std::string text = "index,cell0,cell1,cell2,cell3\n";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        text += std::to_string(i);
        for (const auto &c : parts[i].cells()) {
            std::string cells;
            for (int x : c.cells()) cells += (cells.empty() ? "" : " ") + std::to_string(x);
            text += "," + cells;
        }
        text += "\n";
    }
    return text;
}

std::string export_cayley(const std::string &name, const std::string &format) {
    if (name.empty()) throw UsageError("cayley export needs --group");
    const auto g = build_group(name);
    const auto &t = table_of(g);
    const auto n = t.order();
    const auto k = t.num_generators();
    std::ostringstream os;
    if (format == "json") {
        Json steps = Json::array();
        for (CayleyTable::Index i = 0; i < n; ++i) {
            Json row = Json::array();
            for (std::size_t s = 0; s < k; ++s) row.push_back(t.step(i, static_cast<CayleyTable::Generator>(s)));
            steps.push_back(row);
        }
        os << Json{{"group", name}, {"order", n}, {"generators", generators_of(g)}, {"steps", steps}}.dump() << "\n";
    } else if (format == "csv") {
        os << "element,generator,target\n";
        for (CayleyTable::Index i = 0; i < n; ++i)
            for (std::size_t s = 0; s < k; ++s) os << i << "," << s << "," << t.step(i, static_cast<CayleyTable::Generator>(s)) << "\n";
    } else {
        static constexpr const char *kColors[] = {"black", "red", "blue", "darkgreen", "orange", "purple"};
        os << "digraph \"" << name << "\" {\n  node [shape=point];\n";
        for (CayleyTable::Index i = 0; i < n; ++i) {
            for (std::size_t s = 0; s < k; ++s) {
                os << "  " << i << " -> " << t.step(i, static_cast<CayleyTable::Generator>(s)) << " [color=" << kColors[s % 6]
                   << ", label=\"g" << s << "\"];\n";
            }
        }
        os << "}\n";
    }
    return os.str();
}

int run_export(const ExportOptions &o, std::ostream &out) {
    std::string text;
    if (o.what == "states") text = export_states(o.format);
    if (o.what == "partitions") text = export_partitions(o.format);
    if (o.what == "cayley") text = export_cayley(o.group, o.format);
    emit(text, o.out, out);
    return 0;
}

}  // namespace

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact-arithmetic engine for the two-bit toy theory and its Clifford counterparts", "toybit"};
    app.require_subcommand(1);

    VerifyOptions verify;
    auto *v = app.add_subcommand("verify", "Run the claim verification suite");
    auto *all = v->add_flag("--all", verify.all, "Run every claim (default)");
    v->add_option("--claim", verify.claims, "Claim id, repeatable")->excludes(all);
    v->add_option("--format", verify.format, "Report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    v->add_option("--out", verify.out, "Write the report here instead of stdout");

    EnumerateOptions enumerate;
    auto *e = app.add_subcommand("enumerate", "Enumerate a named group");
    e->add_option("--group", enumerate.group, "Group name")->required()->check(CLI::IsMember(kGroupNames));
    e->add_flag("--histogram", enumerate.histogram, "Include the element-order histogram");
    e->add_flag("--classes", enumerate.classes, "Include conjugacy class sizes");
    e->add_option("--out", enumerate.out, "Write JSON here instead of stdout");

    MeasureOptions measure;
    std::uint64_t seed = 0;
    auto *m = app.add_subcommand("measure", "Simulate repeated measurements by ontic sampling");
    m->add_option("--state", measure.state, "State JSON, e.g. {\"n\":1,\"support\":[0,1]}")->required();
    m->add_option("--partition", measure.partition, "Partition JSON {\"cells\":[state,...]}")->required();
    m->add_option("--shots", measure.shots, "Number of shots")->capture_default_str();
    auto *seed_opt = m->add_option("--seed", seed, "Root seed (default: TOYBIT_SEED, else 0)");

    std::string correlate_state;
    auto *c = app.add_subcommand("correlate", "Test a two-bit state for perfect correlation");
    c->add_option("--state", correlate_state, "State JSON")->required();

    std::string perm;
    auto *eu = app.add_subcommand("euler", "Euler angles of an ontic permutation's Bloch rotation");
    eu->add_option("--perm", perm, "Cycles on points 1..4, e.g. (123)(4)")->required();

    ExportOptions exp;
    auto *x = app.add_subcommand("export", "Export states, partitions or a Cayley graph");
    x->add_option("--what", exp.what, "What to export")->required()->check(CLI::IsMember({"states", "partitions", "cayley"}));
    x->add_option("--group", exp.group, "Group name for cayley")->check(CLI::IsMember(kGroupNames));
    x->add_option("--format", exp.format, "Output format")->check(CLI::IsMember({"json", "csv", "dot"}))->capture_default_str();
    x->add_option("--out", exp.out, "Write here instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return 0;
    } catch (const CLI::ParseError &ex) {
        err << "error: " << ex.what() << "\n" << "run with --help for usage\n";
        return 2;
    }

    try {
        if (v->parsed()) return run_verify(verify, out);
        if (e->parsed()) return run_enumerate(enumerate, out);
        if (m->parsed()) {
            if (seed_opt->count() > 0) measure.seed = seed;
            return run_measure(measure, out);
        }
        if (c->parsed()) return run_correlate(correlate_state, out);
        if (eu->parsed()) return run_euler(perm, out);
        if (x->parsed()) return run_export(exp, out);
    } catch (const UsageError &ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const Error &ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace toybit::cli
