#pragma once

// The acceptance suite: each criterion computes its quantities from scratch,
// compares them with pinned expected values and time limits, and reports
// one pass/fail line.

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "lrc/availability.hpp"
#include "lrc/bounds.hpp"
#include "lrc/cosets.hpp"
#include "lrc/covering.hpp"
#include "lrc/equivalence.hpp"
#include "lrc/families.hpp"
#include "lrc/graph.hpp"
#include "lrc/guards.hpp"
#include "lrc/linear_code.hpp"
#include "lrc/oracles.hpp"
#include "lrc/polyhedron.hpp"
#include "lrc/search.hpp"
#include "lrc/weights.hpp"

namespace lrc {

/// Weight enumerators as printed in the reference table of Platonic codes,
/// keyed by the row label they appear under. "Z^{12}" in the octahedron row
/// is read as z^12 and "1140^{7}" in the dodecahedron row as 1140z^7.
struct ReferenceEnumerator {
    std::string_view row;
    std::string_view polynomial;
};

inline constexpr std::array<ReferenceEnumerator, 5> reference_enumerators{{
    {"tetrahedron", "1+4z^3+3z^4"},
    {"cube", "1+6z^4+16z^6+9z^8"},
    {"octahedron", "1+8z^3+15z^4+24z^5+32z^6+24z^7+15z^8+8z^9+z^12"},
    {"dodecahedron",
     "1+20z^3+30z^4+72z^5+400z^6+1140z^7+2715z^8+6560z^9+14112z^10+26280z^11+42740z^12+59760z^13+72000z^14+"
     "75912z^15+70215z^16+57120z^17+41440z^18+26820z^19+15246z^20+7560z^21+3120z^22+900z^23+125z^24"},
    {"icosahedron",
     "1+12z^5+30z^8+20z^9+72z^10+120z^11+100z^12+180z^13+240z^14+272z^15+345z^16+300z^17+200z^18+120z^19+36z^20"},
}};

/// Row label whose printed polynomial equals `w`, or empty.
inline std::string matching_reference_row(const WeightEnumerator& w) {
    const auto poly = w.polynomial();
    for (const auto& ref : reference_enumerators) {
        if (ref.polynomial == poly) return std::string(ref.row);
    }
    return {};
}

struct PlatonicSummary {
    std::string name;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t r = 0;  // locality certified with t = 2
    bool certified = false;
    WeightEnumerator enumerator;
    std::string matched_row;
};

/// Locality claimed for each solid: vertex degree minus one.
inline std::size_t platonic_locality(std::string_view name) {
    if (name == "octahedron") return 3;
    if (name == "icosahedron") return 4;
    return 2;
}

inline PlatonicSummary summarize_platonic(std::string_view name, const Guards& guards = {}, std::size_t jobs = 1) {
    const auto code = polyhedron_code(platonic(name)).code;
    PlatonicSummary s;
    s.name = std::string(name);
    s.n = code.length();
    s.k = code.dimension();
    s.r = platonic_locality(name);
    const auto report = verify_availability(code, s.r, 2, guards, jobs);
    s.certified = report.all_certified();
    for (const auto& cert : report.bits) {
        if (cert && !certificate_is_valid(code, *cert, s.r, 2)) s.certified = false;
    }
    s.enumerator = weight_enumerator(code, guards);
    s.matched_row = matching_reference_row(s.enumerator);
    return s;
}

struct CriterionResult {
    std::string id;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct Criterion {
    std::string id;
    std::string title;
    std::function<std::pair<bool, std::string>()> body;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Collects failures; `ok` stays true only when every check passes.
struct Checks {
    bool ok = true;
    std::vector<std::string> notes;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back("FAIL " + what);
        }
    }
    void note(const std::string& text) { notes.push_back(text); }
    std::pair<bool, std::string> result() const {
        std::string text;
        for (const auto& n : notes) text += (text.empty() ? "" : "; ") + n;
        return {ok, text};
    }
};

inline std::string dims(const LinearCode& c) {
    return "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "]";
}

inline LinearCode random_code(std::mt19937_64& rng, std::size_t max_n) {
    std::uniform_int_distribution<std::size_t> pick_n(1, max_n);
    const std::size_t n = pick_n(rng);
    std::uniform_int_distribution<std::size_t> pick_rows(0, n);
    const std::size_t rows = pick_rows(rng);
    BitMatrix g(rows, n);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (coin(rng)) g.set(i, j);
        }
    }
    return LinearCode::from_generator(g);
}

inline SimpleGraph random_graph(std::mt19937_64& rng, std::size_t max_v) {
    std::uniform_int_distribution<std::size_t> pick_v(2, max_v);
    std::uniform_real_distribution<double> pick_p(0.1, 0.9);
    SimpleGraph g;
    g.vertex_count = pick_v(rng);
    std::bernoulli_distribution keep(pick_p(rng));
    for (std::size_t u = 0; u < g.vertex_count; ++u) {
        for (std::size_t v = u + 1; v < g.vertex_count; ++v) {
            if (keep(rng)) g.edges.emplace_back(u, v);
        }
    }
    if (g.edges.empty()) g.edges.emplace_back(0, 1);
    return g;
}

}  // namespace detail

inline std::vector<Criterion> acceptance_criteria(const Guards& guards = {}, std::size_t jobs = 1) {
    using detail::Checks;
    std::vector<Criterion> out;

    out.push_back({"1", "Platonic code dimensions", [guards] {
        Checks c;
        const auto start = detail::Clock::now();
        const std::vector<std::tuple<std::string, std::size_t, std::size_t>> expected{
            {"tetrahedron", 6, 3}, {"cube", 12, 5}, {"octahedron", 12, 7}, {"dodecahedron", 30, 11}, {"icosahedron", 30, 19}};
        for (const auto& [name, n, k] : expected) {
            const auto code = polyhedron_code(platonic(name)).code;
            c.note(name + " " + detail::dims(code));
            c.expect(code.length() == n && code.dimension() == k, name + " dimensions");
        }
        const double secs = detail::seconds_since(start);
        c.expect(secs < 1.0, "time limit 1 s");
        return c.result();
    }});

    out.push_back({"2", "Platonic weight enumerators", [guards] {
        Checks c;
        const auto code_of = [](std::string_view name) { return polyhedron_code(platonic(name)).code; };
        for (std::string_view name : {"tetrahedron", "cube", "octahedron"}) {
            const auto w = weight_enumerator(code_of(name), guards);
            const auto row = matching_reference_row(w);
            c.expect(row == name, std::string(name) + " enumerator " + w.polynomial());
        }
        const auto dodeca = weight_enumerator(code_of("dodecahedron"), guards);
        c.expect(dodeca.total() == Count(1) << 11, "dodecahedron total 2^11");
        const auto dodeca_row = matching_reference_row(dodeca);
        c.expect(!dodeca_row.empty(), "dodecahedron enumerator matches a reference row");
        c.note("[30,11] dodecahedron enumerator matches the " + (dodeca_row.empty() ? "(none)" : dodeca_row) + " row");

        const auto start = detail::Clock::now();
        const auto icosa = weight_enumerator(code_of("icosahedron"), guards);
        const double secs = detail::seconds_since(start);
        c.expect(icosa.total() == Count(1) << 19, "icosahedron total 2^19");
        const auto icosa_row = matching_reference_row(icosa);
        c.expect(!icosa_row.empty(), "icosahedron enumerator matches a reference row");
        c.note("[30,19] icosahedron enumerator matches the " + (icosa_row.empty() ? "(none)" : icosa_row) + " row");
        c.expect(secs < 30.0, "2^19 enumeration within 30 s");
        return c.result();
    }});

    out.push_back({"3", "availability certificates", [guards, jobs] {
        Checks c;
        const auto start = detail::Clock::now();
        auto certify = [&](const std::string& label, const LinearCode& code, std::size_t r, std::size_t t) {
            const auto report = verify_availability(code, r, t, guards, jobs);
            bool valid = report.all_certified();
            for (const auto& cert : report.bits) valid = valid && cert && certificate_is_valid(code, *cert, r, t);
            c.expect(valid, label + " (" + std::to_string(r) + "," + std::to_string(t) + ")");
        };
        for (std::string_view name : platonic_names) {
            certify(std::string(name), polyhedron_code(platonic(name)).code, platonic_locality(name), 2);
        }
        certify("simplex [7,3]", simplex_code(3), 2, 3);
        const auto octa = verify_availability(polyhedron_code(platonic("octahedron")).code, 2, 2, guards, jobs);
        c.expect(!octa.all_certified(), "octahedron must fail (2,2)");
        c.note("octahedron (2,2): " + std::to_string(octa.failing_bits().size()) + " of 12 bits uncertified");
        c.expect(detail::seconds_since(start) < 10.0, "time limit 10 s");
        return c.result();
    }});

    out.push_back({"4", "duality of dual polyhedra", [guards] {
        Checks c;
        const std::vector<std::pair<std::string, std::string>> pairs{
            {"tetrahedron", "tetrahedron"}, {"cube", "octahedron"}, {"octahedron", "cube"},
            {"dodecahedron", "icosahedron"}, {"icosahedron", "dodecahedron"}};
        for (const auto& [a, b] : pairs) {
            const auto ca = polyhedron_code(platonic(a)).code;
            const auto cb = polyhedron_code(platonic(b)).code;
            const auto wb = weight_enumerator(cb, guards);
            c.expect(weight_enumerator(dual(ca), guards) == wb, "enumerator of dual(" + a + ") vs " + b);
            c.expect(macwilliams(weight_enumerator(ca, guards), ca.dimension()) == wb, "MacWilliams " + a + " -> " + b);
        }
        const auto tetra = polyhedron_code(platonic("tetrahedron")).code;
        const auto eq = find_equivalence(tetra, dual(tetra), guards);
        const bool mapped = eq.verdict == Equivalence::equivalent && permute_coordinates(tetra, eq.permutation) == dual(tetra);
        c.expect(mapped, "tetrahedron self-dual up to a permutation");
        if (mapped) {
            std::string perm;
            for (auto p : eq.permutation) perm += (perm.empty() ? "" : " ") + std::to_string(p + 1);
            c.note("tetrahedron permutation " + perm);
        }
        return c.result();
    }});

    auto uniqueness = [guards](std::size_t n, std::size_t r, std::size_t t, Rational rate, std::string construction,
                               double limit) {
        Checks c;
        const auto start = detail::Clock::now();
        const auto report = verify_rate_optimal_unique(n, r, t, rate, construction, guards);
        c.note(std::to_string(report.system_count) + " systems, max dual rate " +
               (report.max_dual_rate ? report.max_dual_rate->str() : std::string("none")) + ", " +
               std::to_string(report.optima.size()) + " maximizer(s)");
        c.expect(report.exhausted, "exhausted");
        c.expect(report.rate_as_expected(), "max dual rate " + rate.str());
        c.expect(report.optima_as_expected(), "every maximizer is " + construction);

        // The maximizer, relabeled onto the construction, defines the same code.
        const auto target = parse_construction(construction).system;
        const auto target_form = canonical_form(target);
        for (const auto& o : report.optima) {
            const auto form = canonical_form(o.system);
            if (form.key != target_form.key) continue;
            std::vector<std::size_t> to_target(n);
            std::vector<std::size_t> label_to_target(n);
            for (std::size_t p = 0; p < n; ++p) label_to_target[target_form.label[p]] = p;
            for (std::size_t p = 0; p < n; ++p) to_target[p] = label_to_target[form.label[p]];
            const auto found = permute_coordinates(LinearCode::from_parity(o.system.matrix()), to_target);
            c.expect(codes_equal(found, LinearCode::from_parity(target.matrix())), "maximizer code equals the construction");
        }
        c.expect(detail::seconds_since(start) < limit, "time limit");
        return c.result();
    };

    out.push_back({"5", "rate-optimal (r,2) exact covering at n=6 is K4", [uniqueness] {
        return uniqueness(6, 2, 2, Rational(1, 2), "complete:4", 300.0);
    }});

    out.push_back({"6", "rate-optimal (2,3) exact covering at n=7 is Fano", [uniqueness] {
        return uniqueness(7, 2, 3, Rational(3, 7), "fano", 600.0);
    }});

    out.push_back({"7", "covering radius", [guards] {
        Checks c;
        const auto hamming = hamming_code(3);
        const auto simplex = simplex_code(3);
        const auto rh = covering_radius(hamming, guards).covering_radius;
        const auto rs = covering_radius(simplex, guards).covering_radius;
        c.expect(rh == 1 && oracle_covering_radius(hamming, guards) == 1, "Hamming [7,4] radius 1");
        c.expect(rs == 3 && oracle_covering_radius(simplex, guards) == 3, "Simplex [7,3] radius 3");

        std::size_t checked = 0;
        for (std::size_t n = 3; n <= 9; ++n) {
            for (std::size_t t = 1; 2 * t + 1 <= n; ++t) {
                if ((n * t) % 3 != 0) continue;
                for (const auto& s : enumerate_exact_covering_systems(n, 2, t, guards).systems) {
                    const auto span = LinearCode::from_generator(s.matrix());
                    const auto radius = covering_radius(span, guards).covering_radius;
                    ++checked;
                    c.expect(radius == oracle_covering_radius(span, guards), "oracle radius at n=" + std::to_string(n));
                    c.expect(radius * (t + 1) <= n, "radius " + std::to_string(radius) + " <= n/(t+1) at n=" +
                                                        std::to_string(n) + ", t=" + std::to_string(t));
                }
            }
        }
        c.note(std::to_string(checked) + " (2,t) systems with n <= 9 checked");
        c.expect(checked > 0, "some systems enumerated");
        return c.result();
    }});

    auto crossing = [](std::string a, std::string b, SweepVariable var, std::uint64_t lo, std::uint64_t hi,
                       BoundParams fixed, std::uint64_t expected) {
        Checks c;
        const auto start = detail::Clock::now();
        const auto found = find_crossing(a, b, var, lo, hi, fixed);
        c.note(a + " below " + b + " first at " + to_string(var) + " = " + (found ? std::to_string(*found) : "none"));
        c.expect(found && *found == expected, "expected " + std::to_string(expected));
        c.expect(detail::seconds_since(start) < 1.0, "time limit 1 s");
        return c.result();
    };

    out.push_back({"8a", "entropy bound crosses tbf1 (r=2)", [crossing] {
        return crossing("thm3_entropy", "tbf1", SweepVariable::t, 2, 100, BoundParams{2, std::nullopt, std::nullopt}, 74);
    }});

    out.push_back({"8b", "cor3 crosses bk1 (t=3)", [crossing] {
        return crossing("cor3", "bk1", SweepVariable::r, 3, 90, BoundParams{std::nullopt, 3, std::nullopt}, 72);
    }});

    out.push_back({"9", "transpose transform", [guards, jobs] {
        Checks c;
        const auto start = detail::Clock::now();
        const auto fano = LinearCode::from_parity(transpose_transform(fano_covering_system().matrix()));
        const auto fr = verify_availability(fano, 2, 3, guards, jobs);
        c.expect(fr.all_certified(), "transposed Fano (2,3)");

        const auto lines = simplex_line_system(4).matrix();
        c.expect(lines.rows() == 35 && lines.cols() == 15, "PG(3,2) line matrix is 35 x 15");
        const auto big = LinearCode::from_parity(transpose_transform(lines));
        c.expect(big.length() == 35, "transposed code has length 35");
        const auto br = verify_availability(big, 6, 3, guards, jobs);
        bool valid = br.all_certified();
        for (const auto& cert : br.bits) valid = valid && cert && certificate_is_valid(big, *cert, 6, 3);
        c.expect(valid, "length-35 code (6,3)");
        c.note("transposed line code " + detail::dims(big));
        c.expect(detail::seconds_since(start) < 30.0, "time limit 30 s");
        return c.result();
    }});

    out.push_back({"10", "property suites", [guards] {
        Checks c;
        std::mt19937_64 rng(20240601);
        std::size_t failures = 0;
        for (int i = 0; i < 200; ++i) {
            const auto code = detail::random_code(rng, 14);
            const auto d = dual(code);
            const auto w = weight_enumerator(code, guards);
            const bool ok = macwilliams(w, code.dimension()) == weight_enumerator(d, guards) && dual(d) == code &&
                            code.dimension() + d.dimension() == code.length() &&
                            w == oracle_weight_enumerator(code, guards) &&
                            covering_radius(code, guards).covering_radius == oracle_covering_radius(code, guards);
            if (!ok) ++failures;
        }
        c.expect(failures == 0, std::to_string(failures) + " of 200 random codes");
        std::size_t graph_failures = 0;
        for (int i = 0; i < 100; ++i) {
            const auto g = detail::random_graph(rng, 10);
            const auto code = graph_code(g);
            if (code.dimension() + g.vertex_count != g.edge_count() + g.component_count()) ++graph_failures;
        }
        c.expect(graph_failures == 0, std::to_string(graph_failures) + " of 100 random graphs");
        c.note("200 codes, 100 graphs");
        return c.result();
    }});

    return out;
}

inline CriterionResult run_criterion(const Criterion& criterion) {
    CriterionResult result{criterion.id, criterion.title, false, {}, 0};
    const auto start = detail::Clock::now();
    try {
        auto [ok, detail] = criterion.body();
        result.passed = ok;
        result.detail = std::move(detail);
    } catch (const std::exception& e) {
        result.detail = std::string("exception: ") + e.what();
    }
    result.seconds = detail::seconds_since(start);
    return result;
}

inline std::string format_result(const CriterionResult& r) {
    std::ostringstream out;
    out << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.title << " (" << std::fixed;
    out.precision(2);
    out << r.seconds << " s)";
    if (!r.detail.empty()) out << ": " << r.detail;
    return out.str();
}

}  // namespace lrc
