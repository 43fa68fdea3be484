#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "lrc/availability.hpp"
#include "lrc/families.hpp"
#include "lrc/polyhedron.hpp"
#include "oracle_util.hpp"

using lrc::BitMatrix;
using lrc::ErrorKind;
using lrc::LinearCode;

namespace {

LinearCode repetition(std::size_t n) { return LinearCode::from_generator(BitMatrix::from_strings(std::vector<std::string>{std::string(n, '1')})); }

LinearCode solid(const char* name) { return lrc::polyhedron_code(lrc::platonic(name)).code; }

// Brute-force check of a certificate straight from the definition.
void expect_certificate_by_definition(const LinearCode& c, const lrc::AvailabilityCertificate& cert, std::size_t r,
                                      std::size_t t) {
    ASSERT_EQ(cert.groups.size(), t);
    const auto dual_words = oracle::orthogonal(oracle::masks(c.generator()), c.length());
    for (std::size_t j = 0; j < t; ++j) {
        const auto& g = cert.groups[j];
        EXPECT_LE(g.members.size(), r);
        std::uint64_t word = std::uint64_t{1} << cert.bit;
        for (auto p : g.members) {
            EXPECT_NE(p, cert.bit);
            word |= std::uint64_t{1} << p;
        }
        // the bit is the sum of its group on every codeword
        EXPECT_TRUE(dual_words.count(word)) << "group " << j;
        for (std::size_t l = j + 1; l < t; ++l) {
            for (auto p : g.members) {
                for (auto q : cert.groups[l].members) EXPECT_NE(p, q);
            }
        }
    }
}

}  // namespace

TEST(Availability, TetrahedronHasTwoDisjointGroupsOfTwo) {
    const auto c = solid("tetrahedron");
    const auto report = lrc::verify_availability(c, 2, 2);
    EXPECT_TRUE(report.all_certified());
    for (const auto& cert : report.bits) {
        ASSERT_TRUE(cert);
        EXPECT_TRUE(lrc::certificate_is_valid(c, *cert, 2, 2));
        expect_certificate_by_definition(c, *cert, 2, 2);
    }
    EXPECT_FALSE(lrc::verify_availability(c, 2, 3).all_certified());
}

TEST(Availability, OctahedronNeedsLocalityThree) {
    const auto c = solid("octahedron");
    const auto fail = lrc::verify_availability(c, 2, 2);
    EXPECT_FALSE(fail.all_certified());
    EXPECT_EQ(fail.failing_bits().size(), c.length());
    const auto ok = lrc::verify_availability(c, 3, 2);
    EXPECT_TRUE(ok.all_certified());
    for (const auto& cert : ok.bits) expect_certificate_by_definition(c, *cert, 3, 2);
}

TEST(Availability, FanoDualCode) {
    const auto c = lrc::simplex_code(3);
    const auto report = lrc::verify_availability(c, 2, 3);
    EXPECT_TRUE(report.all_certified());
    for (const auto& cert : report.bits) expect_certificate_by_definition(c, *cert, 2, 3);
    EXPECT_FALSE(lrc::verify_availability(c, 2, 4).all_certified());
}

TEST(Availability, SingleBitSearch) {
    const auto c = solid("cube");
    const auto cert = lrc::find_repair_groups(c, 5, 2, 2);
    ASSERT_TRUE(cert);
    EXPECT_EQ(cert->bit, 5u);
    EXPECT_TRUE(lrc::certificate_is_valid(c, *cert, 2, 2));
    EXPECT_FALSE(lrc::find_repair_groups(c, 5, 2, 3));
}

TEST(Availability, TamperedCertificateIsRejected) {
    const auto c = solid("tetrahedron");
    auto cert = *lrc::find_repair_groups(c, 0, 2, 2);
    auto bad = cert;
    bad.witnesses[0].flip(bad.groups[0].members.front());
    EXPECT_FALSE(lrc::certificate_is_valid(c, bad, 2, 2));
    EXPECT_FALSE(lrc::certificate_is_valid(c, cert, 1, 2));
    EXPECT_FALSE(lrc::certificate_is_valid(c, cert, 2, 3));
}

TEST(Availability, Profile) {
    const auto simplex = lrc::availability_profile(lrc::simplex_code(3), 2);
    EXPECT_EQ(simplex, std::vector<std::size_t>(7, 3));
    const auto rep = lrc::availability_profile(repetition(5), 2);
    EXPECT_EQ(rep, std::vector<std::size_t>(5, 4));
    const auto octa = lrc::availability_profile(solid("octahedron"), 2);
    EXPECT_EQ(octa, std::vector<std::size_t>(12, 0));
}

TEST(Availability, ProfileAgreesWithVerification) {
    const auto c = solid("cube");
    const auto profile = lrc::availability_profile(c, 3);
    for (std::size_t i = 0; i < c.length(); ++i) {
        EXPECT_TRUE(lrc::find_repair_groups(c, i, 3, profile[i]));
        EXPECT_FALSE(lrc::find_repair_groups(c, i, 3, profile[i] + 1));
    }
}

TEST(Availability, ArgumentErrors) {
    const auto c = solid("tetrahedron");
    auto kind_of = [](auto&& f) {
        try {
            f();
        } catch (const lrc::Error& e) {
            return e.kind();
        }
        return ErrorKind::inconsistent_input;
    };
    EXPECT_EQ(kind_of([&] { (void)lrc::verify_availability(c, 0, 2); }), ErrorKind::invalid_argument);
    EXPECT_EQ(kind_of([&] { (void)lrc::verify_availability(c, 2, 0); }), ErrorKind::invalid_argument);
    EXPECT_EQ(kind_of([&] { (void)lrc::verify_availability(c, 6, 1); }), ErrorKind::invalid_argument);
    EXPECT_EQ(kind_of([&] { (void)lrc::find_repair_groups(c, 6, 2, 1); }), ErrorKind::index_out_of_range);
}

TEST(Availability, ThreadCountDoesNotChangeResults) {
    const auto c = solid("icosahedron");
    const auto one = lrc::verify_availability(c, 4, 2, {}, 1);
    const auto four = lrc::verify_availability(c, 4, 2, {}, 4);
    ASSERT_EQ(one.bits.size(), four.bits.size());
    for (std::size_t i = 0; i < one.bits.size(); ++i) {
        ASSERT_EQ(one.bits[i].has_value(), four.bits[i].has_value());
        if (one.bits[i]) {
            EXPECT_EQ(one.bits[i]->witnesses, four.bits[i]->witnesses);
        }
    }
    EXPECT_EQ(lrc::availability_profile(c, 4, {}, 1), lrc::availability_profile(c, 4, {}, 3));
}
