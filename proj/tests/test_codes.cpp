#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lrc/cosets.hpp"
#include "lrc/equivalence.hpp"
#include "lrc/families.hpp"
#include "lrc/linear_code.hpp"
#include "lrc/oracles.hpp"
#include "lrc/polyhedron.hpp"
#include "lrc/weights.hpp"
#include "oracle_util.hpp"

using lrc::BitMatrix;
using lrc::BitVector;
using lrc::ErrorKind;
using lrc::LinearCode;

namespace {

LinearCode code_of(std::vector<std::string> rows) { return LinearCode::from_generator(BitMatrix::from_strings(rows)); }

LinearCode random_code(std::mt19937_64& rng, std::size_t n, std::size_t rows) {
    BitMatrix g(rows, n);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (rng() & 1u) g.set(i, j);
        }
    }
    return LinearCode::from_generator(g);
}

std::set<std::uint64_t> codewords(const LinearCode& c) { return oracle::span(oracle::masks(c.generator())); }

/// Searches all n! coordinate permutations.
bool brute_equivalent(const LinearCode& a, const LinearCode& b) {
    const auto wa = codewords(a);
    const auto wb = codewords(b);
    std::vector<std::size_t> perm(a.length());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::set<std::uint64_t> moved;
        for (auto w : wa) {
            std::uint64_t x = 0;
            for (std::size_t i = 0; i < perm.size(); ++i) {
                if ((w >> i) & 1u) x |= std::uint64_t{1} << perm[i];
            }
            moved.insert(x);
        }
        if (moved == wb) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

template <class F>
void expect_error(ErrorKind kind, F&& f) {
    try {
        f();
        ADD_FAILURE() << "expected " << lrc::to_string(kind);
    } catch (const lrc::Error& e) {
        EXPECT_EQ(e.kind(), kind) << e.what();
    }
}

}  // namespace

TEST(LinearCode, RepetitionAndParityAreDual) {
    const auto rep = code_of({"111"});
    EXPECT_EQ(rep.length(), 3u);
    EXPECT_EQ(rep.dimension(), 1u);
    const auto par = lrc::dual(rep);
    EXPECT_EQ(par.dimension(), 2u);
    EXPECT_TRUE(par.contains(BitVector::from_string("110")));
    EXPECT_FALSE(par.contains(BitVector::from_string("100")));
    EXPECT_EQ(lrc::dual(par), rep);
}

TEST(LinearCode, RedundantGeneratorRowsCollapse) {
    const auto c = code_of({"1100", "0110", "1010"});
    EXPECT_EQ(c.dimension(), 2u);
    EXPECT_EQ(c.redundancy(), 2u);
}

TEST(LinearCode, ZeroAndFullCodes) {
    const auto z = LinearCode::zero(5);
    EXPECT_EQ(z.dimension(), 0u);
    EXPECT_TRUE(z.is_degenerate());
    const auto f = LinearCode::full(5);
    EXPECT_EQ(f.dimension(), 5u);
    EXPECT_EQ(lrc::dual(z), f);
}

TEST(LinearCode, InconsistentMatricesRejected) {
    const auto g = BitMatrix::from_strings(std::vector<std::string>{"111"});
    const auto bad_h = BitMatrix::from_strings(std::vector<std::string>{"100", "010"});
    expect_error(ErrorKind::inconsistent_input, [&] { (void)LinearCode::from_matrices(g, bad_h); });
    const auto h = BitMatrix::from_strings(std::vector<std::string>{"110", "011"});
    EXPECT_EQ(LinearCode::from_matrices(g, h).dimension(), 1u);
}

TEST(LinearCode, DirectSumDimensionsAdd) {
    const auto a = code_of({"111"});
    const auto b = lrc::simplex_code(3);
    const std::vector<LinearCode> parts{a, b};
    const auto s = lrc::direct_sum(parts);
    EXPECT_EQ(s.length(), 10u);
    EXPECT_EQ(s.dimension(), 4u);
    const auto p = lrc::direct_power(b, 3);
    EXPECT_EQ(p.length(), 21u);
    EXPECT_EQ(p.dimension(), 9u);
}

TEST(LinearCode, CodesEqualIgnoresBasisChoice) {
    EXPECT_TRUE(lrc::codes_equal(code_of({"1100", "0011"}), code_of({"1111", "0011"})));
    EXPECT_FALSE(lrc::codes_equal(code_of({"1100"}), code_of({"0011"})));
    expect_error(ErrorKind::length_mismatch, [] { (void)lrc::codes_equal(code_of({"11"}), code_of({"111"})); });
}

TEST(LinearCode, PermuteCoordinates) {
    const auto c = code_of({"1100"});
    const std::vector<std::size_t> perm{3, 2, 1, 0};
    EXPECT_EQ(lrc::permute_coordinates(c, perm), code_of({"0011"}));
}

TEST(LinearCode, GrayWalkVisitsEachCodewordOnce) {
    const auto c = lrc::simplex_code(4);
    std::set<std::string> seen;
    std::size_t visits = 0;
    lrc::for_each_codeword(c.generator(), [&](const BitVector& w) {
        seen.insert(w.to_string());
        ++visits;
    });
    EXPECT_EQ(visits, 16u);
    EXPECT_EQ(seen.size(), 16u);
}

TEST(WeightEnumerator, SmallExamples) {
    EXPECT_EQ(lrc::weight_enumerator(code_of({"111"})).polynomial(), "1+z^3");
    EXPECT_EQ(lrc::weight_enumerator(lrc::hamming_code(3)).polynomial(), "1+7z^3+7z^4+z^7");
    EXPECT_EQ(lrc::weight_enumerator(lrc::simplex_code(3)).polynomial(), "1+7z^4");
    const auto tetra = lrc::polyhedron_code(lrc::platonic("tetrahedron")).code;
    EXPECT_EQ(lrc::weight_enumerator(tetra).polynomial(), "1+4z^3+3z^4");
}

TEST(WeightEnumerator, MatchesBruteForceOracle) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 14;
        const auto c = random_code(rng, n, rng() % (n + 1));
        EXPECT_EQ(lrc::weight_enumerator(c), lrc::oracle_weight_enumerator(c));
    }
}

TEST(WeightEnumerator, MinDistance) {
    EXPECT_EQ(lrc::min_distance(lrc::hamming_code(3)), 3u);
    EXPECT_EQ(lrc::min_distance(lrc::simplex_code(4)), 8u);
    expect_error(ErrorKind::invalid_argument, [] { (void)lrc::min_distance(LinearCode::zero(4)); });
}

TEST(WeightEnumerator, GuardIsEnforced) {
    lrc::Guards tight;
    tight.enumerator_dimension = 2;
    expect_error(ErrorKind::guard_exceeded, [&] { (void)lrc::weight_enumerator(lrc::simplex_code(3), tight); });
}

TEST(MacWilliams, HammingToSimplex) {
    const auto w = lrc::weight_enumerator(lrc::hamming_code(3));
    EXPECT_EQ(lrc::macwilliams(w, 4), lrc::weight_enumerator(lrc::simplex_code(3)));
}

TEST(MacWilliams, RejectsBadTotals) {
    auto w = lrc::weight_enumerator(lrc::hamming_code(3));
    w.counts[3] += 1;
    expect_error(ErrorKind::inconsistent_input, [&] { (void)lrc::macwilliams(w, 4); });
}

TEST(CoveringRadius, KnownCodes) {
    EXPECT_EQ(lrc::covering_radius(lrc::hamming_code(3)).covering_radius, 1u);
    EXPECT_EQ(lrc::covering_radius(lrc::simplex_code(3)).covering_radius, 3u);
    EXPECT_EQ(lrc::covering_radius(LinearCode::full(6)).covering_radius, 0u);
    EXPECT_EQ(lrc::covering_radius(code_of({"11111"})).covering_radius, 2u);
}

TEST(CoveringRadius, OracleExamples) {
    EXPECT_EQ(lrc::oracle_covering_radius(lrc::hamming_code(3)), 1u);
    EXPECT_EQ(lrc::oracle_covering_radius(lrc::simplex_code(3)), 3u);
    EXPECT_EQ(lrc::oracle_covering_radius(LinearCode::full(5)), 0u);
}

TEST(CoveringRadius, LeaderDistributionCountsEveryCoset) {
    const auto a = lrc::covering_radius(lrc::simplex_code(3));
    const auto dist = a.leader_weight_distribution();
    EXPECT_EQ(std::accumulate(dist.begin(), dist.end(), std::uint64_t{0}), 16u);
    EXPECT_EQ(dist[0], 1u);
    EXPECT_EQ(dist[1], 7u);
}

TEST(CoveringRadius, MatchesOracleOnRandomCodes) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 13;
        const auto c = random_code(rng, n, rng() % (n + 1));
        EXPECT_EQ(lrc::covering_radius(c).covering_radius, lrc::oracle_covering_radius(c));
    }
}

TEST(CoveringRadius, GuardIsEnforced) {
    lrc::Guards tight;
    tight.syndrome_bits = 3;
    expect_error(ErrorKind::guard_exceeded, [&] { (void)lrc::covering_radius(lrc::simplex_code(3), tight); });
}

TEST(Equivalence, TetrahedronIsSelfDualUpToPermutation) {
    const auto tetra = lrc::polyhedron_code(lrc::platonic("tetrahedron")).code;
    const auto d = lrc::dual(tetra);
    const auto r = lrc::find_equivalence(tetra, d);
    ASSERT_EQ(r.verdict, lrc::Equivalence::equivalent);
    EXPECT_EQ(lrc::permute_coordinates(tetra, r.permutation), d);
}

TEST(Equivalence, RandomPermutationsAreRecovered) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + rng() % 11;
        const auto c = random_code(rng, n, 1 + rng() % n);
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto b = lrc::permute_coordinates(c, perm);
        const auto r = lrc::find_equivalence(c, b);
        ASSERT_EQ(r.verdict, lrc::Equivalence::equivalent);
        EXPECT_EQ(lrc::permute_coordinates(c, r.permutation), b);
    }
}

TEST(Equivalence, AgreesWithExhaustivePermutationSearch) {
    // Codes of length 6 bucketed by enumerator; compare every pair in a bucket.
    std::mt19937_64 rng(23);
    std::map<std::string, std::vector<LinearCode>> buckets;
    for (int i = 0; i < 120; ++i) {
        const auto c = random_code(rng, 6, 3);
        buckets[std::to_string(c.dimension()) + lrc::weight_enumerator(c).polynomial()].push_back(c);
    }
    std::size_t pairs = 0;
    for (const auto& [key, codes] : buckets) {
        for (std::size_t i = 0; i < codes.size() && i < 6; ++i) {
            for (std::size_t j = i + 1; j < codes.size() && j < 6; ++j) {
                const bool expected = brute_equivalent(codes[i], codes[j]);
                const auto r = lrc::find_equivalence(codes[i], codes[j]);
                EXPECT_EQ(r.verdict == lrc::Equivalence::equivalent, expected);
                ++pairs;
            }
        }
    }
    EXPECT_GT(pairs, 20u);
}

TEST(Equivalence, LongCodesOnlyGetNecessaryCondition) {
    const auto c = lrc::simplex_code(4);
    EXPECT_EQ(lrc::find_equivalence(c, c).verdict, lrc::Equivalence::consistent_with_equivalence);
    EXPECT_EQ(lrc::find_equivalence(c, lrc::dual(lrc::hamming_code(4))).verdict,
              lrc::Equivalence::consistent_with_equivalence);
    EXPECT_EQ(lrc::find_equivalence(lrc::hamming_code(3), code_of({"1000000", "0100000", "0010000", "0001000"})).verdict,
              lrc::Equivalence::not_equivalent);
}
