#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "lrc/error.hpp"
#include "lrc/guards.hpp"
#include "lrc/linear_code.hpp"
#include "lrc/weights.hpp"

namespace lrc {

enum class Equivalence { equivalent, not_equivalent, consistent_with_equivalence };

inline const char* to_string(Equivalence e) {
    switch (e) {
        case Equivalence::equivalent: return "equivalent";
        case Equivalence::not_equivalent: return "not-equivalent";
        case Equivalence::consistent_with_equivalence: return "consistent-with-equivalence";
    }
    return "?";
}

struct EquivalenceResult {
    Equivalence verdict = Equivalence::not_equivalent;
    /// When equivalent: permute_coordinates(a, permutation) equals b.
    std::vector<std::size_t> permutation;
};

/// Decides whether two codes agree up to a coordinate permutation.
///
/// Up to guards.equivalence_length the answer is exact: a backtracking
/// search maps coordinates of `a` onto coordinates of `b` one at a time,
/// keeping only maps under which the projected codeword multisets agree.
/// Longer codes only get the weight-enumerator necessary condition.
inline EquivalenceResult find_equivalence(const LinearCode& a, const LinearCode& b, const Guards& guards = {}) {
    if (a.length() != b.length()) throw Error(ErrorKind::length_mismatch, "codes have different lengths");
    if (a.dimension() != b.dimension()) return {};
    if (weight_enumerator(a, guards) != weight_enumerator(b, guards)) return {};
    const std::size_t n = a.length();
    if (n > guards.equivalence_length || n > 64) return {Equivalence::consistent_with_equivalence, {}};

    auto words_of = [](const LinearCode& c) {
        std::vector<std::uint64_t> words;
        for_each_codeword(c.generator(), [&](const BitVector& w) { words.push_back(w.low_word()); });
        return words;
    };
    const auto wa = words_of(a);
    const auto wb = words_of(b);

    // Coordinate signature: how many codewords of each weight cover it.
    auto signatures = [n](const std::vector<std::uint64_t>& words) {
        std::vector<std::vector<std::size_t>> sig(n, std::vector<std::size_t>(n + 1, 0));
        for (auto w : words) {
            const auto wt = static_cast<std::size_t>(std::popcount(w));
            for (std::size_t i = 0; i < n; ++i) {
                if ((w >> i) & 1u) ++sig[i][wt];
            }
        }
        return sig;
    };
    const auto sa = signatures(wa);
    const auto sb = signatures(wb);

    std::vector<std::size_t> image(n, 0);
    std::vector<bool> used(n, false);
    std::vector<std::uint64_t> keys_a(wa.size(), 0);
    std::vector<std::uint64_t> keys_b(wb.size(), 0);

    std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
        if (i == n) return true;
        const auto saved_a = keys_a;
        std::vector<std::uint64_t> sorted_a(wa.size());
        for (std::size_t w = 0; w < wa.size(); ++w) {
            keys_a[w] = (saved_a[w] << 1) | ((wa[w] >> i) & 1u);
            sorted_a[w] = keys_a[w];
        }
        std::sort(sorted_a.begin(), sorted_a.end());
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || sa[i] != sb[j]) continue;
            const auto saved_b = keys_b;
            std::vector<std::uint64_t> sorted_b(wb.size());
            for (std::size_t w = 0; w < wb.size(); ++w) {
                keys_b[w] = (saved_b[w] << 1) | ((wb[w] >> j) & 1u);
                sorted_b[w] = keys_b[w];
            }
            std::sort(sorted_b.begin(), sorted_b.end());
            if (sorted_a == sorted_b) {
                used[j] = true;
                image[i] = j;
                if (extend(i + 1)) return true;
                used[j] = false;
            }
            keys_b = saved_b;
        }
        keys_a = saved_a;
        return false;
    };

    if (!extend(0)) return {};
    return {Equivalence::equivalent, image};
}

}  // namespace lrc
