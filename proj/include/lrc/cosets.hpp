#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lrc/error.hpp"
#include "lrc/guards.hpp"
#include "lrc/linear_code.hpp"

namespace lrc {

/// Minimum coset-leader weight for every syndrome of a code.
///
/// Syndromes are indexed by integers whose bit i is the inner product with
/// row i of the code's (echelon) parity-check matrix.
struct CosetAnalysis {
    LinearCode code;
    std::vector<std::uint8_t> leader_weight_by_syndrome;
    std::size_t covering_radius = 0;

    /// Number of cosets whose leader has weight w, for w = 0..covering_radius.
    [[nodiscard]] std::vector<std::uint64_t> leader_weight_distribution() const {
        std::vector<std::uint64_t> dist(covering_radius + 1, 0);
        for (auto w : leader_weight_by_syndrome) ++dist[w];
        return dist;
    }
};

/// Breadth-first sweep over syndrome space: level w holds exactly the
/// syndromes first reached by a weight-w vector, obtained from level w-1 by
/// adding one parity-check column. Stops once every syndrome is reached.
inline CosetAnalysis covering_radius(const LinearCode& c, const Guards& guards = {}) {
    const std::size_t bits = c.redundancy();
    if (bits > guards.syndrome_bits || bits >= 63) {
        throw Error(ErrorKind::guard_exceeded, "n - k = " + std::to_string(bits) + " exceeds the syndrome guard of " +
                                                   std::to_string(guards.syndrome_bits));
    }
    const std::size_t n = c.length();
    std::vector<std::uint64_t> columns(n, 0);
    for (std::size_t i = 0; i < bits; ++i) {
        for (auto j : c.parity().row(i).support()) columns[j] |= std::uint64_t{1} << i;
    }

    constexpr std::uint8_t unseen = 0xff;
    const std::uint64_t syndromes = std::uint64_t{1} << bits;
    std::vector<std::uint8_t> leader(syndromes, unseen);
    leader[0] = 0;
    std::vector<std::uint64_t> frontier{0};
    std::uint64_t reached = 1;
    std::size_t weight = 0;
    while (reached < syndromes) {
        std::vector<std::uint64_t> next;
        ++weight;
        for (auto s : frontier) {
            for (auto col : columns) {
                const auto t = s ^ col;
                if (leader[t] == unseen) {
                    leader[t] = static_cast<std::uint8_t>(weight);
                    next.push_back(t);
                    ++reached;
                }
            }
        }
        if (next.empty()) {
            throw Error(ErrorKind::inconsistent_input, "parity-check columns do not span the syndrome space");
        }
        frontier = std::move(next);
    }
    return CosetAnalysis{c, std::move(leader), weight};
}

}  // namespace lrc
