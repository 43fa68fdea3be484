#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "lrc/search.hpp"

using lrc::CoveringSystem;
using lrc::ErrorKind;
using lrc::PointMask;
using lrc::Rational;

namespace {

PointMask permute_mask(PointMask m, const std::vector<std::size_t>& perm) {
    PointMask out = 0;
    for (; m != 0; m &= m - 1) out |= PointMask{1} << perm[std::countr_zero(m)];
    return out;
}

std::set<PointMask> permuted_set(const std::vector<PointMask>& blocks, const std::vector<std::size_t>& perm) {
    std::set<PointMask> out;
    for (auto b : blocks) out.insert(permute_mask(b, perm));
    return out;
}

CoveringSystem relabeled(const CoveringSystem& s, const std::vector<std::size_t>& perm) {
    const auto masks = lrc::subset_masks(s);
    const auto set = permuted_set(masks, perm);
    return lrc::system_from_masks(s.n, {set.begin(), set.end()});
}

// Labeled exact coverings counted by plain backtracking over (r+1)-subsets in
// order of lowest point: each point in exactly t subsets, two subsets share at most
// one point.
std::uint64_t labeled_count(std::size_t n, std::size_t r, std::size_t t) {
    std::vector<PointMask> all;
    for (PointMask m = 0; m < (PointMask{1} << n); ++m) {
        if (static_cast<std::size_t>(std::popcount(m)) == r + 1) all.push_back(m);
    }
    std::stable_sort(all.begin(), all.end(), [](PointMask a, PointMask b) { return std::countr_zero(a) < std::countr_zero(b); });
    const std::size_t need = n * t / (r + 1);
    std::vector<std::size_t> deg(n, 0);
    std::vector<PointMask> chosen;
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (chosen.size() == need) {
            ++count;
            return;
        }
        // the lowest point still short of t must be covered by a later subset
        std::size_t p = 0;
        while (p < n && deg[p] == t) ++p;
        for (std::size_t i = from; i < all.size(); ++i) {
            const auto b = all[i];
            if (std::countr_zero(b) > static_cast<int>(p)) break;
            if (std::countr_zero(b) < static_cast<int>(p)) continue;
            bool ok = true;
            for (PointMask x = b; x != 0 && ok; x &= x - 1) ok = deg[std::countr_zero(x)] < t;
            for (auto c : chosen) ok = ok && std::popcount(c & b) <= 1;
            if (!ok) continue;
            for (PointMask x = b; x != 0; x &= x - 1) ++deg[std::countr_zero(x)];
            chosen.push_back(b);
            self(self, i + 1);
            chosen.pop_back();
            for (PointMask x = b; x != 0; x &= x - 1) --deg[std::countr_zero(x)];
        }
    };
    rec(rec, 0);
    return count;
}

std::uint64_t automorphism_count(const CoveringSystem& s) {
    const auto masks = lrc::subset_masks(s);
    const std::set<PointMask> original(masks.begin(), masks.end());
    std::vector<std::size_t> perm(s.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        if (permuted_set(masks, perm) == original) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

std::uint64_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

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

TEST(CanonicalForm, InvariantUnderRelabeling) {
    std::mt19937_64 rng(3);
    for (const auto& s : {lrc::fano_covering_system(), lrc::complete_star_system(5),
                          lrc::complete_star_system(4).direct_sum(lrc::complete_star_system(4))}) {
        const auto base = lrc::canonical_form(s);
        std::vector<std::size_t> perm(s.n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int trial = 0; trial < 20; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            const auto moved = relabeled(s, perm);
            EXPECT_EQ(lrc::canonical_form(moved).key, base.key);
            EXPECT_TRUE(lrc::isomorphic(s, moved));
        }
    }
}

TEST(CanonicalForm, LabelMapsInputOntoKey) {
    const auto s = relabeled(lrc::fano_covering_system(), {3, 0, 6, 2, 5, 1, 4});
    const auto form = lrc::canonical_form(s);
    EXPECT_EQ(permuted_set(lrc::subset_masks(s), form.label), std::set<PointMask>(form.key.begin(), form.key.end()));
}

TEST(CanonicalForm, SeparatesNonIsomorphicSystems) {
    // two triangles versus a hexagon, as 2-regular graphs on 6 points
    const CoveringSystem triangles{6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}};
    const CoveringSystem hexagon{6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}};
    EXPECT_FALSE(lrc::isomorphic(triangles, hexagon));
    EXPECT_EQ(error_of([] { (void)lrc::canonical_form(CoveringSystem{3, {{0, 1}}}); }), ErrorKind::precondition_violated);
}

TEST(Enumeration, SmallCases) {
    EXPECT_EQ(lrc::enumerate_exact_covering_systems(3, 2, 1).systems.size(), 1u);
    EXPECT_TRUE(lrc::enumerate_exact_covering_systems(5, 4, 2).systems.empty());
    const auto k4 = lrc::enumerate_exact_covering_systems(6, 2, 2);
    ASSERT_FALSE(k4.systems.empty());
    EXPECT_TRUE(std::any_of(k4.systems.begin(), k4.systems.end(),
                            [](const auto& s) { return lrc::isomorphic(s, lrc::complete_star_system(4)); }));
    const auto fano = lrc::enumerate_exact_covering_systems(7, 2, 3);
    ASSERT_EQ(fano.systems.size(), 1u);
    EXPECT_TRUE(lrc::isomorphic(fano.systems.front(), lrc::fano_covering_system()));
}

TEST(Enumeration, EverySystemIsAnExactCovering) {
    for (auto [n, r, t] : {std::array<std::size_t, 3>{8, 1, 3}, {9, 2, 2}, {9, 2, 3}, {10, 1, 2}}) {
        const auto e = lrc::enumerate_exact_covering_systems(n, r, t);
        for (const auto& s : e.systems) EXPECT_TRUE(lrc::check_exact_covering(s, r, t).valid);
        for (std::size_t i = 0; i + 1 < e.systems.size(); ++i) {
            EXPECT_FALSE(lrc::isomorphic(e.systems[i], e.systems[i + 1]));
        }
    }
}

// Orbit counting: the labeled systems split into classes of size n!/|Aut|.
TEST(Enumeration, ClassesAccountForEveryLabeledSystem) {
    for (auto [n, r, t] : {std::array<std::size_t, 3>{6, 1, 2}, {6, 2, 2}, {7, 2, 3}, {7, 1, 2}, {8, 1, 3}, {8, 3, 2}}) {
        const auto e = lrc::enumerate_exact_covering_systems(n, r, t);
        std::uint64_t orbit_total = 0;
        for (const auto& s : e.systems) orbit_total += factorial(n) / automorphism_count(s);
        EXPECT_EQ(orbit_total, labeled_count(n, r, t)) << n << "," << r << "," << t;
    }
}

TEST(Enumeration, Deterministic) {
    const auto a = lrc::enumerate_exact_covering_systems(9, 1, 4);
    const auto b = lrc::enumerate_exact_covering_systems(9, 1, 4);
    EXPECT_EQ(a.systems, b.systems);
    EXPECT_EQ(a.labeled_visits, b.labeled_visits);
}

TEST(Enumeration, Errors) {
    EXPECT_EQ(error_of([] { (void)lrc::enumerate_exact_covering_systems(7, 2, 2); }), ErrorKind::non_integral_count);
    EXPECT_EQ(error_of([] { (void)lrc::enumerate_exact_covering_systems(12, 1, 2); }), ErrorKind::guard_exceeded);
    EXPECT_EQ(error_of([] { (void)lrc::enumerate_exact_covering_systems(12, 2, 3); }), ErrorKind::guard_exceeded);
    EXPECT_EQ(error_of([] { (void)lrc::enumerate_exact_covering_systems(0, 2, 3); }), ErrorKind::invalid_argument);
    lrc::Guards tight;
    tight.search_points_t2 = 5;
    EXPECT_EQ(error_of([&] { (void)lrc::enumerate_exact_covering_systems(6, 2, 2, tight); }), ErrorKind::guard_exceeded);
}

TEST(Constructions, Parsing) {
    EXPECT_EQ(lrc::parse_construction("fano").system.n, 7u);
    const auto k5 = lrc::parse_construction("complete:5^2");
    EXPECT_EQ(k5.label, "complete:5^2");
    EXPECT_EQ(k5.system.n, 20u);
    EXPECT_EQ(error_of([] { (void)lrc::parse_construction("petersen"); }), ErrorKind::unknown_name);
    EXPECT_EQ(error_of([] { (void)lrc::parse_construction("fano^x"); }), ErrorKind::parse_error);
    EXPECT_EQ(lrc::construction_for_length("fano", 14)->label, "fano^2");
    EXPECT_FALSE(lrc::construction_for_length("fano", 10));
}

TEST(RateOptimality, CompleteGraphAtSixPoints) {
    const auto report = lrc::verify_rate_optimal_unique(6, 2, 2, Rational(1, 2), std::string("complete:4"));
    EXPECT_TRUE(report.exhausted);
    ASSERT_TRUE(report.max_dual_rate);
    EXPECT_EQ(*report.max_dual_rate, Rational(1, 2));
    EXPECT_TRUE(report.expectations_met());
    for (const auto& o : report.optima) {
        EXPECT_EQ(o.classification, "complete:4");
        // an explicit relabeling carries the construction onto the optimum
        const auto a = lrc::canonical_form(o.system);
        const auto b = lrc::canonical_form(lrc::complete_star_system(4));
        EXPECT_EQ(permuted_set(lrc::subset_masks(o.system), a.label),
                  permuted_set(lrc::subset_masks(lrc::complete_star_system(4)), b.label));
    }
}

TEST(RateOptimality, FanoAtSevenPoints) {
    const auto report = lrc::verify_rate_optimal_unique(7, 2, 3, Rational(3, 7), std::string("fano"));
    EXPECT_EQ(report.system_count, 1u);
    EXPECT_TRUE(report.expectations_met());
    ASSERT_EQ(report.optima.size(), 1u);
    EXPECT_EQ(report.optima.front().rank, 4u);
}

TEST(RateOptimality, EmptySearchHasNoRate) {
    const auto report = lrc::verify_rate_optimal_unique(5, 4, 2);
    EXPECT_TRUE(report.exhausted);
    EXPECT_EQ(report.system_count, 0u);
    EXPECT_FALSE(report.max_dual_rate);
    EXPECT_TRUE(report.optima.empty());
}

TEST(RateOptimality, WrongExpectationIsReported) {
    const auto report = lrc::verify_rate_optimal_unique(6, 2, 2, Rational(2, 3), std::string("complete:4"));
    EXPECT_FALSE(report.rate_as_expected());
    EXPECT_FALSE(report.expectations_met());
    EXPECT_EQ(error_of([] { (void)lrc::verify_rate_optimal_unique(6, 2, 2, {}, std::string("fano")); }),
              ErrorKind::invalid_parameter);
}
