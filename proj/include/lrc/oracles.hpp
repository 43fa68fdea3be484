#pragma once

// Brute-force reference computations over all 2^n vectors. Slow and simple
// on purpose: they share no code path with the enumerator or the coset sweep.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <vector>

#include "lrc/error.hpp"
#include "lrc/guards.hpp"
#include "lrc/linear_code.hpp"
#include "lrc/weights.hpp"

namespace lrc {

namespace detail {

inline std::vector<std::uint64_t> oracle_checks(const LinearCode& c, const Guards& guards) {
    if (c.length() > guards.oracle_length || c.length() > 30) {
        throw Error(ErrorKind::guard_exceeded, "oracle needs n <= " + std::to_string(guards.oracle_length));
    }
    std::vector<std::uint64_t> rows;
    for (const auto& h : c.parity().row_vectors()) rows.push_back(h.low_word());
    return rows;
}

inline bool oracle_member(std::uint64_t x, const std::vector<std::uint64_t>& checks) {
    return std::all_of(checks.begin(), checks.end(), [x](std::uint64_t h) { return (std::popcount(h & x) & 1) == 0; });
}

}  // namespace detail

inline WeightEnumerator oracle_weight_enumerator(const LinearCode& c, const Guards& guards = {}) {
    const auto checks = detail::oracle_checks(c, guards);
    const std::size_t n = c.length();
    std::vector<std::uint64_t> counts(n + 1, 0);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        if (detail::oracle_member(x, checks)) ++counts[static_cast<std::size_t>(std::popcount(x))];
    }
    return make_enumerator(n, counts);
}

/// Largest distance from any vector to the code: breadth-first search on
/// the n-cube started from every codeword at once.
inline std::size_t oracle_covering_radius(const LinearCode& c, const Guards& guards = {}) {
    const auto checks = detail::oracle_checks(c, guards);
    const std::size_t n = c.length();
    const std::uint64_t size = std::uint64_t{1} << n;
    constexpr std::uint8_t unseen = 0xff;
    std::vector<std::uint8_t> dist(size, unseen);
    std::deque<std::uint64_t> queue;
    for (std::uint64_t x = 0; x < size; ++x) {
        if (detail::oracle_member(x, checks)) {
            dist[x] = 0;
            queue.push_back(x);
        }
    }
    std::size_t radius = 0;
    while (!queue.empty()) {
        const auto x = queue.front();
        queue.pop_front();
        radius = std::max<std::size_t>(radius, dist[x]);
        for (std::size_t i = 0; i < n; ++i) {
            const auto y = x ^ (std::uint64_t{1} << i);
            if (dist[y] == unseen) {
                dist[y] = static_cast<std::uint8_t>(dist[x] + 1);
                queue.push_back(y);
            }
        }
    }
    return radius;
}

}  // namespace lrc
