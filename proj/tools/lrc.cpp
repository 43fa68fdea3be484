// lrc: construct codes, certify availability, evaluate rate bounds and run
// the exhaustive searches. Payload on stdout, diagnostics on stderr.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage or input error.

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lrc/lrc.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t parse_count(const std::string& text, const std::string& what) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != text.size() || text.empty() || text.front() == '-') throw UsageError(what + " must be a non-negative integer, got '" + text + "'");
    return static_cast<std::size_t>(v);
}

void print_json(const lrc::Json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// construct

struct ConstructOptions {
    std::string family;
    std::vector<std::string> args;
    bool with_enumerator = false;
    bool dual = false;
    std::size_t copies = 1;
    bool transpose = false;
};

lrc::LinearCode build_code(const ConstructOptions& o, std::string& label) {
    auto arg = [&](std::size_t i, const char* what) -> const std::string& {
        if (o.args.size() <= i) throw UsageError("construct " + o.family + " needs " + what);
        return o.args[i];
    };
    auto expect_args = [&](std::size_t count) {
        if (o.args.size() > count) throw UsageError("construct " + o.family + ": unexpected argument '" + o.args[count] + "'");
    };
    if (o.transpose && o.family != "covering") throw UsageError("--transpose applies to covering files only");
    if (o.family == "platonic") {
        expect_args(1);
        label = arg(0, "a solid name");
        return lrc::polyhedron_code(lrc::platonic(label)).code;
    }
    if (o.family == "graph") {
        expect_args(1);
        label = "graph:" + arg(0, "an edge-list file");
        return lrc::graph_code(lrc::graph_from_edge_list(lrc::read_text_file(o.args[0])));
    }
    if (o.family == "polyhedron") {
        expect_args(1);
        const auto p = lrc::polyhedron_from_json(lrc::parse_json_text(lrc::read_text_file(arg(0, "a polyhedron file"))));
        label = p.name.empty() ? "polyhedron" : p.name;
        return lrc::polyhedron_code(p).code;
    }
    if (o.family == "complete") {
        expect_args(1);
        const auto q = parse_count(arg(0, "q"), "q");
        label = "complete:" + std::to_string(q);
        return lrc::complete_graph_code(q);
    }
    if (o.family == "simplex" || o.family == "hamming") {
        expect_args(1);
        const auto m = parse_count(arg(0, "m"), "m");
        label = o.family + ":" + std::to_string(m);
        return o.family == "simplex" ? lrc::simplex_code(m) : lrc::hamming_code(m);
    }
    if (o.family == "fano") {
        expect_args(0);
        label = "fano";
        return lrc::LinearCode::from_parity(lrc::fano_covering_system().matrix());
    }
    if (o.family == "covering") {
        expect_args(1);
        const auto s = lrc::covering_from_text(lrc::read_text_file(arg(0, "a covering file")));
        label = "covering:" + o.args[0];
        if (o.transpose) {
            label += ":transposed";
            return lrc::LinearCode::from_parity(lrc::transpose_transform(s.matrix()));
        }
        return lrc::LinearCode::from_parity(s.matrix());
    }
    throw UsageError("unknown family '" + o.family +
                     "' (expected platonic, graph, polyhedron, complete, simplex, hamming, fano or covering)");
}

int run_construct(const ConstructOptions& o, const lrc::Guards& guards) {
    if (o.copies == 0) throw UsageError("--copies must be positive");
    std::string label;
    auto code = build_code(o, label);
    if (o.dual) {
        code = lrc::dual(code);
        label = "dual(" + label + ")";
    }
    if (o.copies > 1) {
        code = lrc::direct_power(code, o.copies);
        label += "^" + std::to_string(o.copies);
    }
    auto j = lrc::code_to_json(code);
    j["family"] = label;
    if (o.with_enumerator) j["weightEnumerator"] = lrc::enumerator_to_json(lrc::weight_enumerator(code, guards));
    print_json(j);
    return exit_ok;
}

// ---------------------------------------------------------------------------
// analyze

int run_analyze(const std::string& file, std::optional<std::size_t> r, std::optional<std::size_t> t, bool profile,
                const lrc::Guards& guards, std::size_t jobs) {
    const auto code = lrc::read_code_file(file);
    if (!r) throw UsageError("analyze needs --r");
    if (profile) {
        if (t) throw UsageError("--profile and --t are exclusive");
        const auto best = lrc::availability_profile(code, *r, guards, jobs);
        lrc::Json bits = lrc::Json::array();
        for (std::size_t i = 0; i < best.size(); ++i) bits.push_back(lrc::Json{{"bit", i + 1}, {"t", best[i]}});
        const auto min_t = best.empty() ? 0 : *std::min_element(best.begin(), best.end());
        print_json(lrc::Json{{"n", code.length()}, {"k", code.dimension()}, {"r", *r}, {"minT", min_t}, {"bits", bits}});
        return exit_ok;
    }
    if (!t) throw UsageError("analyze needs --t or --profile");
    const auto report = lrc::verify_availability(code, *r, *t, guards, jobs);
    lrc::Json j{{"n", code.length()}, {"k", code.dimension()}};
    const auto details = lrc::availability_to_json(report);
    for (const auto& [key, value] : details.items()) j[key] = value;
    print_json(j);
    if (!report.all_certified()) {
        std::cerr << "lrc: " << report.failing_bits().size() << " bit(s) lack (" << *r << "," << *t
                  << ") repair groups\n";
        return exit_failed;
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// bounds

struct BoundsOptions {
    std::vector<std::string> names;
    std::string sweep;
    std::string range;
    std::vector<std::string> fix;
    std::string format = "csv";
    std::vector<std::string> crossing;
    bool list = false;
};

std::vector<std::string> split_names(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& item : raw) {
        std::stringstream in(item);
        std::string name;
        while (std::getline(in, name, ',')) {
            if (!name.empty()) out.push_back(name);
        }
    }
    return out;
}

lrc::SweepVariable parse_variable(const std::string& text) {
    if (text == "r") return lrc::SweepVariable::r;
    if (text == "t") return lrc::SweepVariable::t;
    if (text == "n") return lrc::SweepVariable::n;
    throw UsageError("--sweep takes r, t or n, got '" + text + "'");
}

int run_bounds(const BoundsOptions& o) {
    if (o.format != "csv" && o.format != "json") throw UsageError("--format takes csv or json");
    if (o.list) {
        lrc::Json list = lrc::Json::array();
        for (const auto& b : lrc::bound_registry) {
            lrc::Json needs = lrc::Json::array();
            if (b.needs_r) needs.push_back("r");
            if (b.needs_t) needs.push_back("t");
            if (b.needs_n) needs.push_back("n");
            list.push_back(lrc::Json{{"name", b.name}, {"needs", needs}});
        }
        print_json(list);
        return exit_ok;
    }
    lrc::BoundParams fixed;
    for (const auto& item : split_names(o.fix)) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("--fix takes k=v, got '" + item + "'");
        const auto key = item.substr(0, eq);
        const auto value = parse_count(item.substr(eq + 1), key);
        if (key == "r") {
            fixed.r = value;
        } else if (key == "t") {
            fixed.t = value;
        } else if (key == "n") {
            fixed.n = value;
        } else {
            throw UsageError("--fix key must be r, t or n, got '" + key + "'");
        }
    }
    std::optional<lrc::SweepVariable> variable;
    if (!o.sweep.empty()) variable = parse_variable(o.sweep);
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    if (!o.range.empty()) {
        const auto colon = o.range.find(':');
        if (colon == std::string::npos) throw UsageError("--range takes a:b");
        lo = parse_count(o.range.substr(0, colon), "range start");
        hi = parse_count(o.range.substr(colon + 1), "range end");
    }
    if (variable && o.range.empty()) throw UsageError("--sweep needs --range");

    if (!o.crossing.empty()) {
        if (o.crossing.size() != 2) throw UsageError("--crossing takes two bound names");
        if (!variable) throw UsageError("--crossing needs --sweep and --range");
        const auto at = lrc::find_crossing(o.crossing[0], o.crossing[1], *variable, lo, hi, fixed);
        if (o.format == "json") {
            print_json(lrc::Json{{"a", o.crossing[0]}, {"b", o.crossing[1]}, {"variable", lrc::to_string(*variable)},
                                 {"crossing", at ? lrc::Json(*at) : lrc::Json(nullptr)}});
        } else {
            std::cout << (at ? std::to_string(*at) : std::string("none")) << "\n";
        }
        return exit_ok;
    }

    const auto names = split_names(o.names);
    if (names.empty()) throw UsageError("bounds needs --names, --crossing or --list");
    if (!variable) {
        lrc::Json values = lrc::Json::array();
        for (const auto& name : names) values.push_back(lrc::bound_value_to_json(lrc::evaluate_bound(name, fixed)));
        if (o.format == "json") {
            print_json(values);
        } else {
            std::cout << "name,value\n";
            for (const auto& name : names) std::cout << name << "," << lrc::evaluate_bound(name, fixed).decimal(12) << "\n";
        }
        return exit_ok;
    }
    const auto table = lrc::sweep(names, *variable, lo, hi, fixed);
    if (o.format == "json") {
        print_json(lrc::bound_table_to_json(table));
    } else {
        table.write_csv(std::cout);
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// table1, search, verify

int run_table1(const lrc::Guards& guards, std::size_t jobs) {
    lrc::Json rows = lrc::Json::array();
    bool ok = true;
    for (auto name : lrc::platonic_names) {
        const auto s = lrc::summarize_platonic(name, guards, jobs);
        ok = ok && s.certified;
        rows.push_back(lrc::Json{{"solid", s.name},
                                 {"dual", std::string(lrc::platonic_dual_of(name))},
                                 {"n", s.n},
                                 {"k", s.k},
                                 {"availability", lrc::Json{{"r", s.r}, {"t", 2}, {"certified", s.certified}}},
                                 {"weightEnumerator", lrc::enumerator_to_json(s.enumerator)},
                                 {"matchesRow", s.matched_row.empty() ? lrc::Json(nullptr) : lrc::Json(s.matched_row)},
                                 {"matchesOwnRow", s.matched_row == s.name}});
    }
    print_json(rows);
    return ok ? exit_ok : exit_failed;
}

int run_search(std::size_t n, std::size_t r, std::size_t t, const std::string& expect_rate, const std::string& expect,
               const lrc::Guards& guards) {
    std::optional<lrc::Rational> rate;
    if (!expect_rate.empty()) rate = lrc::parse_rational(expect_rate);
    std::optional<std::string> construction;
    if (!expect.empty()) construction = expect;
    const auto report = lrc::verify_rate_optimal_unique(n, r, t, rate, construction, guards);
    print_json(lrc::search_report_to_json(report));
    if (!report.expectations_met()) {
        std::cerr << "lrc: search expectations not met\n";
        return exit_failed;
    }
    return exit_ok;
}

int run_verify(const std::vector<std::string>& only, const lrc::Guards& guards, std::size_t jobs) {
    bool all = true;
    std::size_t ran = 0;
    for (const auto& c : lrc::acceptance_criteria(guards, jobs)) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        const auto result = lrc::run_criterion(c);
        std::cout << lrc::format_result(result) << std::endl;
        all = all && result.passed;
        ++ran;
    }
    if (ran == 0) throw UsageError("no acceptance criterion matches the selection");
    return all ? exit_ok : exit_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Locally repairable binary codes: constructions, availability, rate bounds, exhaustive search"};
    app.require_subcommand(1);
    std::size_t jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for availability checks")->check(CLI::PositiveNumber);

    ConstructOptions construct;
    auto* c = app.add_subcommand("construct", "print a code as JSON");
    c->add_option("family", construct.family, "platonic|graph|polyhedron|complete|simplex|hamming|fano|covering")->required();
    c->add_option("args", construct.args, "family arguments");
    c->add_flag("--with-enumerator", construct.with_enumerator, "append the weight enumerator");
    c->add_flag("--dual", construct.dual, "print the dual code");
    c->add_option("--copies", construct.copies, "direct sum of this many copies");
    c->add_flag("--transpose", construct.transpose, "transpose an exact-covering parity-check matrix first");

    std::string code_file;
    std::optional<std::size_t> r;
    std::optional<std::size_t> t;
    bool profile = false;
    auto* a = app.add_subcommand("analyze", "certify (r,t)-availability of a code JSON file");
    a->add_option("file", code_file, "code JSON")->required();
    a->add_option("--r", r, "locality");
    a->add_option("--t", t, "availability");
    a->add_flag("--profile", profile, "largest t per bit for the given r");

    BoundsOptions bounds;
    auto* b = app.add_subcommand("bounds", "evaluate, sweep or compare rate bounds");
    b->add_option("--names", bounds.names, "bound names, comma separated");
    b->add_option("--sweep", bounds.sweep, "r, t or n");
    b->add_option("--range", bounds.range, "a:b, inclusive");
    b->add_option("--fix", bounds.fix, "fixed parameter k=v");
    b->add_option("--format", bounds.format, "csv or json");
    b->add_option("--crossing", bounds.crossing, "first parameter where bound a < bound b")->expected(2);
    b->add_flag("--list", bounds.list, "list the available bounds");

    auto* t1 = app.add_subcommand("table1", "Platonic codes: dimensions, availability, enumerators");

    std::size_t sn = 0;
    std::size_t sr = 0;
    std::size_t st = 0;
    std::string expect_rate;
    std::string expect;
    auto* s = app.add_subcommand("search", "exhaustive exact-covering search");
    s->add_option("n", sn, "points")->required();
    s->add_option("r", sr, "locality")->required();
    s->add_option("t", st, "availability")->required();
    s->add_option("--expect-rate", expect_rate, "expected maximum rate p/q");
    s->add_option("--expect", expect, "expected maximizer: complete:q or fano");

    std::vector<std::string> only;
    auto* v = app.add_subcommand("verify", "run the acceptance suite");
    v->add_option("--criterion", only, "run only these criterion ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        const auto guards = lrc::Guards::from_environment();
        if (*c) return run_construct(construct, guards);
        if (*a) return run_analyze(code_file, r, t, profile, guards, jobs);
        if (*b) return run_bounds(bounds);
        if (*t1) return run_table1(guards, jobs);
        if (*s) return run_search(sn, sr, st, expect_rate, expect, guards);
        if (*v) return run_verify(only, guards, jobs);
    } catch (const UsageError& e) {
        std::cerr << "lrc: " << e.what() << "\n";
        return exit_usage;
    } catch (const lrc::Error& e) {
        std::cerr << "lrc: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
