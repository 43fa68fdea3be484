#pragma once

// File formats and JSON renderings. Everything external is 1-based;
// the in-memory structures are 0-based.
//
// code JSON        {"n": 6, "k": 3, "generator": ["101100", ...], "parity": [...]}
//                  bitstrings list coordinate 1 first; either matrix may be
//                  omitted and is then derived from the other.
// graph file       one edge "u v" per line; edge j is line j.
// polyhedron JSON  {"vertices": 4, "edges": [[1,3], ...], "faces": [[1,4,5], ...], "name": "..."}
// covering file    first line "n N", then N lines of point indices.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lrc/availability.hpp"
#include "lrc/bounds.hpp"
#include "lrc/covering.hpp"
#include "lrc/error.hpp"
#include "lrc/gf2.hpp"
#include "lrc/graph.hpp"
#include "lrc/linear_code.hpp"
#include "lrc/polyhedron.hpp"
#include "lrc/search.hpp"
#include "lrc/weights.hpp"

namespace lrc {

using Json = nlohmann::ordered_json;

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::parse_error, "cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::parse_error, e.what());
    }
}

// ---------------------------------------------------------------------------
// Codes

inline Json matrix_to_json(const BitMatrix& m) {
    Json rows = Json::array();
    for (const auto& row : m.row_vectors()) rows.push_back(row.to_string());
    return rows;
}

inline BitMatrix matrix_from_json(const Json& rows, std::size_t n, const char* field) {
    if (!rows.is_array()) throw Error(ErrorKind::parse_error, std::string(field) + " must be an array of bitstrings");
    BitMatrix m(0, n);
    for (const auto& r : rows) {
        if (!r.is_string()) throw Error(ErrorKind::parse_error, std::string(field) + " rows must be strings");
        const auto text = r.get<std::string>();
        if (text.size() != n) {
            throw Error(ErrorKind::length_mismatch, std::string(field) + " row has " + std::to_string(text.size()) +
                                                        " symbols, expected n = " + std::to_string(n));
        }
        try {
            m.append_row(BitVector::from_string(text));
        } catch (const Error& e) {
            throw Error(ErrorKind::parse_error, e.what());
        }
    }
    return m;
}

inline Json count_to_json(const Count& c) {
    if (c <= Count(std::numeric_limits<std::uint64_t>::max())) return c.convert_to<std::uint64_t>();
    return c.str();
}

inline Json enumerator_to_json(const WeightEnumerator& w) {
    Json counts = Json::array();
    for (const auto& a : w.counts) counts.push_back(count_to_json(a));
    return Json{{"counts", counts}, {"polynomial", w.polynomial()}, {"total", count_to_json(w.total())}};
}

inline Json code_to_json(const LinearCode& c) {
    return Json{{"n", c.length()}, {"k", c.dimension()}, {"generator", matrix_to_json(c.generator())},
                {"parity", matrix_to_json(c.parity())}};
}

inline bool is_count(const Json& v) { return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0); }

inline LinearCode code_from_json(const Json& j) {
    if (!j.is_object()) throw Error(ErrorKind::parse_error, "code JSON must be an object");
    if (!j.contains("n") || !is_count(j["n"])) throw Error(ErrorKind::parse_error, "code JSON needs a non-negative integer n");
    const auto n = j["n"].get<std::size_t>();
    if (n == 0) throw Error(ErrorKind::parse_error, "n must be positive");
    const bool has_g = j.contains("generator") && !j["generator"].is_null();
    const bool has_h = j.contains("parity") && !j["parity"].is_null();
    if (!has_g && !has_h) throw Error(ErrorKind::parse_error, "code JSON needs a generator or a parity matrix");
    std::optional<LinearCode> code;
    if (has_g && has_h) {
        code = LinearCode::from_matrices(matrix_from_json(j["generator"], n, "generator"),
                                         matrix_from_json(j["parity"], n, "parity"));
    } else if (has_g) {
        code = LinearCode::from_generator(matrix_from_json(j["generator"], n, "generator"));
    } else {
        code = LinearCode::from_parity(matrix_from_json(j["parity"], n, "parity"));
    }
    if (j.contains("k")) {
        if (!is_count(j["k"])) throw Error(ErrorKind::parse_error, "k must be a non-negative integer");
        if (j["k"].get<std::size_t>() != code->dimension()) {
            throw Error(ErrorKind::inconsistent_input, "declared k = " + std::to_string(j["k"].get<std::size_t>()) +
                                                           " but the matrices give k = " + std::to_string(code->dimension()));
        }
    }
    return *code;
}

inline LinearCode read_code_file(const std::string& path) { return code_from_json(parse_json_text(read_text_file(path))); }

// ---------------------------------------------------------------------------
// Graphs, polyhedra, covering systems

namespace detail {

inline std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string::npos) lines.pop_back();
    return lines;
}

inline std::vector<std::size_t> parse_indices(const std::string& line, std::size_t line_no) {
    std::istringstream in(line);
    std::vector<std::size_t> out;
    std::string token;
    while (in >> token) {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(token, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != token.size() || token.front() == '-') {
            throw Error(ErrorKind::parse_error, "line " + std::to_string(line_no) + ": '" + token + "' is not an index");
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

}  // namespace detail

inline SimpleGraph graph_from_edge_list(const std::string& text) {
    SimpleGraph g;
    const auto lines = detail::content_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto idx = detail::parse_indices(lines[i], i + 1);
        if (idx.size() != 2) throw Error(ErrorKind::parse_error, "line " + std::to_string(i + 1) + ": expected 'u v'");
        if (idx[0] == 0 || idx[1] == 0) throw Error(ErrorKind::parse_error, "line " + std::to_string(i + 1) + ": vertices are 1-based");
        g.edges.emplace_back(idx[0] - 1, idx[1] - 1);
        g.vertex_count = std::max({g.vertex_count, idx[0], idx[1]});
    }
    g.validate();
    return g;
}

inline std::string graph_to_edge_list(const SimpleGraph& g) {
    std::string out;
    for (auto [u, v] : g.edges) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

inline Json polyhedron_to_json(const Polyhedron& p) {
    Json edges = Json::array();
    for (auto [u, v] : p.graph.edges) edges.push_back(Json::array({u + 1, v + 1}));
    Json faces = Json::array();
    for (const auto& f : p.faces) {
        Json face = Json::array();
        for (auto e : f) face.push_back(e + 1);
        faces.push_back(face);
    }
    return Json{{"vertices", p.vertex_count()}, {"edges", edges}, {"faces", faces}, {"name", p.name}};
}

inline Polyhedron polyhedron_from_json(const Json& j) {
    try {
        Polyhedron p;
        p.name = j.value("name", std::string{});
        p.graph.vertex_count = j.at("vertices").get<std::size_t>();
        for (const auto& e : j.at("edges")) {
            const auto u = e.at(0).get<std::size_t>();
            const auto v = e.at(1).get<std::size_t>();
            if (e.size() != 2 || u == 0 || v == 0) throw Error(ErrorKind::parse_error, "edges are 1-based pairs");
            p.graph.edges.emplace_back(u - 1, v - 1);
        }
        for (const auto& f : j.at("faces")) {
            std::vector<std::size_t> face;
            for (const auto& e : f) {
                const auto idx = e.get<std::size_t>();
                if (idx == 0) throw Error(ErrorKind::parse_error, "face edge indices are 1-based");
                face.push_back(idx - 1);
            }
            p.faces.push_back(std::move(face));
        }
        p.validate();
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::parse_error, e.what());
    }
}

inline CoveringSystem covering_from_text(const std::string& text) {
    const auto lines = detail::content_lines(text);
    if (lines.empty()) throw Error(ErrorKind::parse_error, "empty covering file");
    const auto head = detail::parse_indices(lines[0], 1);
    if (head.size() != 2) throw Error(ErrorKind::parse_error, "line 1: expected 'n N'");
    if (lines.size() - 1 != head[1]) {
        throw Error(ErrorKind::parse_error, "header announces " + std::to_string(head[1]) + " subsets, found " +
                                                std::to_string(lines.size() - 1));
    }
    CoveringSystem s{head[0], {}};
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto idx = detail::parse_indices(lines[i], i + 1);
        for (auto& p : idx) {
            if (p == 0) throw Error(ErrorKind::parse_error, "line " + std::to_string(i + 1) + ": points are 1-based");
            --p;
        }
        std::sort(idx.begin(), idx.end());
        s.subsets.push_back(std::move(idx));
    }
    s.validate();
    return s;
}

inline std::string covering_to_text(const CoveringSystem& s) {
    std::string out = std::to_string(s.n) + " " + std::to_string(s.size()) + "\n";
    for (const auto& sub : s.subsets) {
        for (std::size_t i = 0; i < sub.size(); ++i) out += (i ? " " : "") + std::to_string(sub[i] + 1);
        out += "\n";
    }
    return out;
}

inline Json covering_to_json(const CoveringSystem& s) {
    Json subsets = Json::array();
    for (const auto& sub : s.subsets) {
        Json one = Json::array();
        for (auto p : sub) one.push_back(p + 1);
        subsets.push_back(one);
    }
    return Json{{"n", s.n}, {"subsets", subsets}};
}

// ---------------------------------------------------------------------------
// Reports

inline std::string rational_text(const Rational& q) {
    const auto den = boost::multiprecision::denominator(q);
    if (den == 1) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

/// "p/q" or an integer; throws parse-error otherwise.
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        std::size_t pos = 0;
        if (slash == std::string::npos) {
            const auto v = std::stoll(text, &pos);
            if (pos != text.size()) throw std::invalid_argument(text);
            return Rational(v);
        }
        const auto num = std::stoll(text.substr(0, slash), &pos);
        if (pos != slash) throw std::invalid_argument(text);
        const auto rest = text.substr(slash + 1);
        const auto den = std::stoll(rest, &pos);
        if (pos != rest.size() || den == 0) throw std::invalid_argument(text);
        return Rational(num, den);
    } catch (const std::exception&) {
        throw Error(ErrorKind::parse_error, "'" + text + "' is not a rational p/q");
    }
}

inline Json one_based(const std::vector<std::size_t>& v) {
    Json out = Json::array();
    for (auto x : v) out.push_back(x + 1);
    return out;
}

inline Json availability_to_json(const AvailabilityReport& report) {
    Json bits = Json::array();
    for (std::size_t i = 0; i < report.bits.size(); ++i) {
        Json entry{{"bit", i + 1}, {"certified", report.bits[i].has_value()}};
        if (report.bits[i]) {
            Json groups = Json::array();
            for (const auto& g : report.bits[i]->groups) groups.push_back(one_based(g.members));
            entry["groups"] = groups;
        }
        bits.push_back(entry);
    }
    return Json{{"r", report.r}, {"t", report.t}, {"allCertified", report.all_certified()},
                {"failingBits", one_based(report.failing_bits())}, {"bits", bits}};
}

inline Json bound_value_to_json(const BoundValue& v) {
    Json j{{"name", v.name()}, {"exact", v.is_exact()}, {"value", v.text()}, {"decimal", v.decimal(12)}};
    return j;
}

inline Json bound_table_to_json(const BoundTable& t) {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        Json values = Json::object();
        for (std::size_t i = 0; i < t.names.size(); ++i) values[t.names[i]] = row.values[i].text();
        rows.push_back(Json{{"param", row.param}, {"values", values}});
    }
    return Json{{"sweepVariable", to_string(t.variable)}, {"names", t.names}, {"rows", rows}};
}

inline Json search_report_to_json(const SearchReport& r) {
    Json optima = Json::array();
    for (const auto& o : r.optima) {
        Json entry = covering_to_json(o.system);
        entry["rank"] = o.rank;
        entry["isomorphicTo"] = o.classification;
        optima.push_back(entry);
    }
    Json j{{"n", r.n},
           {"r", r.r},
           {"t", r.t},
           {"systemCount", r.system_count},
           {"maxDualRate", r.max_dual_rate ? Json(rational_text(*r.max_dual_rate)) : Json(nullptr)},
           {"optimaCount", r.optima.size()},
           {"optima", optima},
           {"exhausted", r.exhausted}};
    if (r.expected_rate || r.expected_construction) {
        Json e = Json::object();
        if (r.expected_rate) e["rate"] = rational_text(*r.expected_rate);
        if (r.expected_construction) e["construction"] = *r.expected_construction;
        e["met"] = r.expectations_met();
        j["expectations"] = e;
    }
    return j;
}

}  // namespace lrc
