#include <gtest/gtest.h>

#include <string>

#include "lrc/io.hpp"

using lrc::ErrorKind;
using lrc::Json;

namespace {

template <class F>
ErrorKind error_of(F&& f) {
    try {
        f();
    } catch (const lrc::Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error";
    return ErrorKind::inconsistent_input;
}

}  // namespace

TEST(CodeJson, RoundTrip) {
    const auto c = lrc::polyhedron_code(lrc::platonic("cube")).code;
    const auto j = lrc::code_to_json(c);
    EXPECT_EQ(j["n"], 12);
    EXPECT_EQ(j["k"], 5);
    const auto back = lrc::code_from_json(lrc::parse_json_text(j.dump()));
    EXPECT_TRUE(lrc::codes_equal(back, c));
}

TEST(CodeJson, EitherMatrixIsEnough) {
    const auto g = lrc::code_from_json(Json{{"n", 3}, {"generator", {"111"}}});
    const auto h = lrc::code_from_json(Json{{"n", 3}, {"parity", {"110", "011"}}});
    EXPECT_TRUE(lrc::codes_equal(g, h));
}

TEST(CodeJson, Errors) {
    EXPECT_EQ(error_of([] { (void)lrc::parse_json_text("{"); }), ErrorKind::parse_error);
    EXPECT_EQ(error_of([] { (void)lrc::code_from_json(Json{{"n", 3}}); }), ErrorKind::parse_error);
    EXPECT_EQ(error_of([] { (void)lrc::code_from_json(Json{{"n", 3}, {"generator", {"11"}}}); }), ErrorKind::length_mismatch);
    EXPECT_EQ(error_of([] { (void)lrc::code_from_json(Json{{"n", 3}, {"generator", {"1a1"}}}); }), ErrorKind::parse_error);
    EXPECT_EQ(error_of([] { (void)lrc::code_from_json(Json{{"n", 3}, {"k", 2}, {"generator", {"111"}}}); }),
              ErrorKind::inconsistent_input);
    EXPECT_EQ(error_of([] { (void)lrc::read_code_file("/nonexistent/code.json"); }), ErrorKind::parse_error);
}

TEST(EnumeratorJson, CountsAndPolynomial) {
    const auto w = lrc::weight_enumerator(lrc::hamming_code(3));
    const auto j = lrc::enumerator_to_json(w);
    EXPECT_EQ(j["counts"], Json::parse("[1,0,0,7,7,0,0,1]"));
    EXPECT_EQ(j["total"], 16);
    EXPECT_EQ(j["polynomial"], w.polynomial());
    EXPECT_EQ(lrc::count_to_json(lrc::Count(1) << 70), "1180591620717411303424");
}

TEST(EdgeList, RoundTripIsOneBased) {
    const std::string text = "1 2\n2 3\n3 1\n\n";
    const auto g = lrc::graph_from_edge_list(text);
    EXPECT_EQ(g.vertex_count, 3u);
    EXPECT_EQ(g.edges.front(), (std::pair<std::size_t, std::size_t>{0, 1}));
    EXPECT_EQ(lrc::graph_to_edge_list(g), "1 2\n2 3\n3 1\n");
    EXPECT_EQ(error_of([] { (void)lrc::graph_from_edge_list("0 1\n"); }), ErrorKind::parse_error);
    EXPECT_EQ(error_of([] { (void)lrc::graph_from_edge_list("1 2 3\n"); }), ErrorKind::parse_error);
    EXPECT_EQ(error_of([] { (void)lrc::graph_from_edge_list("1 x\n"); }), ErrorKind::parse_error);
    EXPECT_EQ(error_of([] { (void)lrc::graph_from_edge_list("1 1\n"); }), ErrorKind::invalid_graph);
}

TEST(PolyhedronJson, RoundTrip) {
    for (auto name : lrc::platonic_names) {
        const auto p = lrc::platonic(name);
        const auto back = lrc::polyhedron_from_json(lrc::polyhedron_to_json(p));
        EXPECT_EQ(back.name, p.name);
        EXPECT_EQ(back.graph.edges, p.graph.edges);
        EXPECT_EQ(back.faces, p.faces);
    }
    auto j = lrc::polyhedron_to_json(lrc::platonic("tetrahedron"));
    j["faces"][0] = Json::array({1, 2, 5});
    EXPECT_EQ(error_of([&] { (void)lrc::polyhedron_from_json(j); }), ErrorKind::invalid_polyhedron);
    EXPECT_EQ(error_of([] { (void)lrc::polyhedron_from_json(Json{{"vertices", 4}}); }), ErrorKind::parse_error);
}

TEST(CoveringText, RoundTrip) {
    const auto fano = lrc::fano_covering_system();
    const auto text = lrc::covering_to_text(fano);
    EXPECT_EQ(text.substr(0, text.find('\n')), "7 7");
    EXPECT_EQ(lrc::covering_from_text(text), fano);
    const auto unsorted = lrc::covering_from_text("4 2\n2 1\n4 3\n");
    EXPECT_EQ(unsorted.subsets.front(), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(error_of([] { (void)lrc::covering_from_text("4 3\n1 2\n"); }), ErrorKind::parse_error);
    EXPECT_EQ(error_of([] { (void)lrc::covering_from_text("3 1\n1 4\n"); }), ErrorKind::index_out_of_range);
    EXPECT_EQ(error_of([] { (void)lrc::covering_from_text(""); }), ErrorKind::parse_error);
    const auto j = lrc::covering_to_json(fano);
    EXPECT_EQ(j["n"], 7);
    EXPECT_EQ(j["subsets"].size(), 7u);
}

TEST(Rationals, ParseAndPrint) {
    EXPECT_EQ(lrc::parse_rational("3/7"), lrc::Rational(3, 7));
    EXPECT_EQ(lrc::parse_rational("2/4"), lrc::Rational(1, 2));
    EXPECT_EQ(lrc::parse_rational("1"), lrc::Rational(1));
    EXPECT_EQ(lrc::rational_text(lrc::Rational(6, 14)), "3/7");
    EXPECT_EQ(lrc::rational_text(lrc::Rational(2)), "2");
    for (const char* bad : {"", "1/0", "a/b", "1/2/3", "0.5"}) {
        EXPECT_EQ(error_of([bad] { (void)lrc::parse_rational(bad); }), ErrorKind::parse_error) << bad;
    }
}

TEST(ReportJson, AvailabilityUsesOneBasedBits) {
    const auto c = lrc::polyhedron_code(lrc::platonic("octahedron")).code;
    const auto j = lrc::availability_to_json(lrc::verify_availability(c, 2, 2));
    EXPECT_EQ(j["allCertified"], false);
    EXPECT_EQ(j["failingBits"].size(), 12u);
    EXPECT_EQ(j["failingBits"][0], 1);
    EXPECT_EQ(j["bits"][0]["bit"], 1);
    const auto ok = lrc::availability_to_json(lrc::verify_availability(lrc::simplex_code(3), 2, 3));
    EXPECT_EQ(ok["allCertified"], true);
    EXPECT_EQ(ok["bits"][0]["groups"].size(), 3u);
}

TEST(ReportJson, SearchReport) {
    const auto r = lrc::verify_rate_optimal_unique(7, 2, 3, lrc::Rational(3, 7), std::string("fano"));
    const auto j = lrc::search_report_to_json(r);
    EXPECT_EQ(j["systemCount"], 1);
    EXPECT_EQ(j["maxDualRate"], "3/7");
    EXPECT_EQ(j["optima"][0]["isomorphicTo"], "fano");
    EXPECT_EQ(j["expectations"]["met"], true);
    const auto none = lrc::search_report_to_json(lrc::verify_rate_optimal_unique(5, 4, 2));
    EXPECT_TRUE(none["maxDualRate"].is_null());
    EXPECT_FALSE(none.contains("expectations"));
}

TEST(ReportJson, BoundTable) {
    const auto t = lrc::sweep({"tbf1"}, lrc::SweepVariable::t, 1, 2, {2, std::nullopt, std::nullopt});
    const auto j = lrc::bound_table_to_json(t);
    EXPECT_EQ(j["sweepVariable"], "t");
    EXPECT_EQ(j["rows"][1]["values"]["tbf1"], "8/15");
    const auto v = lrc::bound_value_to_json(lrc::evaluate_bound("thm3_entropy", {std::nullopt, 3, std::nullopt}));
    EXPECT_EQ(v["exact"], false);
}
