#pragma once

// Covering systems: multisets of subsets of the points 0..n-1, usually the
// supports of low-weight dual codewords. Includes the exact-covering check
// and the intersection-graph machinery used to reason about their span.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "lrc/error.hpp"
#include "lrc/gf2.hpp"
#include "lrc/guards.hpp"

namespace lrc {

struct CoveringSystem {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> subsets;  // each sorted, non-empty

    [[nodiscard]] std::size_t size() const noexcept { return subsets.size(); }

    void validate() const {
        for (std::size_t i = 0; i < subsets.size(); ++i) {
            const auto& s = subsets[i];
            if (s.empty()) throw Error(ErrorKind::invalid_argument, "subset " + std::to_string(i + 1) + " is empty");
            for (std::size_t j = 0; j < s.size(); ++j) {
                if (s[j] >= n) throw Error(ErrorKind::index_out_of_range, "subset " + std::to_string(i + 1) + " names a point beyond n");
                if (j > 0 && s[j] <= s[j - 1]) {
                    throw Error(ErrorKind::invalid_argument, "subset " + std::to_string(i + 1) + " is not strictly increasing");
                }
            }
        }
    }

    /// N x n matrix, one row per subset.
    [[nodiscard]] BitMatrix matrix() const {
        BitMatrix m(subsets.size(), n);
        for (std::size_t i = 0; i < subsets.size(); ++i) {
            for (auto p : subsets[i]) m.set(i, p);
        }
        return m;
    }

    /// Number of subsets containing each point.
    [[nodiscard]] std::vector<std::size_t> coverage() const {
        std::vector<std::size_t> c(n, 0);
        for (const auto& s : subsets) {
            for (auto p : s) ++c[p];
        }
        return c;
    }

    /// Disjoint union; the points of `other` follow this system's points.
    [[nodiscard]] CoveringSystem direct_sum(const CoveringSystem& other) const {
        CoveringSystem out{n + other.n, subsets};
        for (auto s : other.subsets) {
            for (auto& p : s) p += n;
            out.subsets.push_back(std::move(s));
        }
        return out;
    }

    friend bool operator==(const CoveringSystem&, const CoveringSystem&) = default;
};

inline CoveringSystem covering_system_from_matrix(const BitMatrix& m) {
    CoveringSystem s{m.cols(), {}};
    for (const auto& row : m.row_vectors()) s.subsets.push_back(row.support());
    s.validate();
    return s;
}

inline std::size_t intersection_size(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

// ---------------------------------------------------------------------------
// Exact covering

enum class ViolationKind { row_weight, column_weight, pair_intersection, count };

inline const char* to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::row_weight: return "row-weight";
        case ViolationKind::column_weight: return "column-weight";
        case ViolationKind::pair_intersection: return "pair-intersection";
        case ViolationKind::count: return "count";
    }
    return "?";
}

struct Violation {
    ViolationKind kind;
    std::vector<std::size_t> indices;  // subset indices, a point, or empty for count
};

struct ExactCoveringReport {
    bool valid = false;
    std::size_t n = 0;
    std::size_t subset_count = 0;
    std::size_t r = 0;
    std::size_t t = 0;
    std::vector<Violation> violations;
};

/// N = nt/(r+1) subsets, each of size r+1, each point in exactly t of them,
/// and no two subsets sharing more than one point.
inline ExactCoveringReport check_exact_covering(const CoveringSystem& s, std::size_t r, std::size_t t) {
    s.validate();
    ExactCoveringReport report{false, s.n, s.size(), r, t, {}};
    if ((s.n * t) % (r + 1) != 0 || s.size() != s.n * t / (r + 1)) {
        report.violations.push_back({ViolationKind::count, {}});
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.subsets[i].size() != r + 1) report.violations.push_back({ViolationKind::row_weight, {i}});
    }
    const auto cover = s.coverage();
    for (std::size_t p = 0; p < s.n; ++p) {
        if (cover[p] != t) report.violations.push_back({ViolationKind::column_weight, {p}});
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (intersection_size(s.subsets[i], s.subsets[j]) > 1) {
                report.violations.push_back({ViolationKind::pair_intersection, {i, j}});
            }
        }
    }
    report.valid = report.violations.empty();
    return report;
}

/// (r, t) read off a matrix with uniform row and column weights, if any.
struct CoveringParams {
    std::size_t r = 0;
    std::size_t t = 0;
};

inline std::optional<CoveringParams> uniform_covering_params(const BitMatrix& h) {
    if (h.rows() == 0 || h.cols() == 0) return std::nullopt;
    const auto rows = h.row_weights();
    const auto cols = h.column_weights();
    if (rows.front() == 0 || std::adjacent_find(rows.begin(), rows.end(), std::not_equal_to<>()) != rows.end()) {
        return std::nullopt;
    }
    if (std::adjacent_find(cols.begin(), cols.end(), std::not_equal_to<>()) != cols.end()) return std::nullopt;
    return CoveringParams{rows.front() - 1, cols.front()};
}

// ---------------------------------------------------------------------------
// Intersection graph

struct IntersectionGraph {
    CoveringSystem system;
    std::vector<std::vector<std::size_t>> adjacency;
    std::vector<std::size_t> component_of;  // component id per subset
    std::size_t component_count = 0;

    [[nodiscard]] std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& a : adjacency) twice += a.size();
        return twice / 2;
    }

    [[nodiscard]] std::vector<std::size_t> component_sizes() const {
        std::vector<std::size_t> sizes(component_count, 0);
        for (auto c : component_of) ++sizes[c];
        return sizes;
    }

    /// Common degree when the graph is regular.
    [[nodiscard]] std::optional<std::size_t> regular_degree() const {
        if (adjacency.empty()) return std::nullopt;
        const auto d = adjacency.front().size();
        for (const auto& a : adjacency) {
            if (a.size() != d) return std::nullopt;
        }
        return d;
    }
};

/// One vertex per subset; two vertices adjacent when their subsets meet.
inline IntersectionGraph intersection_graph(const CoveringSystem& s) {
    s.validate();
    IntersectionGraph g{s, std::vector<std::vector<std::size_t>>(s.size()), std::vector<std::size_t>(s.size(), 0), 0};
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (intersection_size(s.subsets[i], s.subsets[j]) > 0) {
                g.adjacency[i].push_back(j);
                g.adjacency[j].push_back(i);
            }
        }
    }
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::fill(g.component_of.begin(), g.component_of.end(), unset);
    for (std::size_t start = 0; start < s.size(); ++start) {
        if (g.component_of[start] != unset) continue;
        std::vector<std::size_t> stack{start};
        g.component_of[start] = g.component_count;
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            for (auto w : g.adjacency[v]) {
                if (g.component_of[w] == unset) {
                    g.component_of[w] = g.component_count;
                    stack.push_back(w);
                }
            }
        }
        ++g.component_count;
    }
    return g;
}

struct ComponentRankBound {
    std::size_t bound = 0;       // N - (number of components)
    std::size_t rank = 0;        // exact GF(2) rank of the subsets
    std::size_t components = 0;
};

/// When every point lies in exactly two subsets, a minimal dependency among
/// the subsets is a whole connected component of the intersection graph, so
/// dropping one subset per component leaves an independent set.
inline ComponentRankBound component_rank_bound(const CoveringSystem& s) {
    const auto cover = s.coverage();
    for (std::size_t p = 0; p < s.n; ++p) {
        if (cover[p] != 2) {
            throw Error(ErrorKind::precondition_violated,
                        "point " + std::to_string(p + 1) + " is covered " + std::to_string(cover[p]) + " times, not twice");
        }
    }
    const auto g = intersection_graph(s);
    return {s.size() - g.component_count, s.matrix().rank(), g.component_count};
}

struct DisjointSubsets {
    std::size_t count = 0;
    std::vector<std::size_t> witness;  // indices of pairwise disjoint subsets
};

/// Maximum number of pairwise disjoint subsets: a maximum independent set of
/// the intersection graph, found by branch and bound over bitmasks.
inline DisjointSubsets max_disjoint_subsets(const CoveringSystem& s, const Guards& guards = {}) {
    const std::size_t count = s.size();
    if (count > guards.disjoint_subsets || count > 64) {
        throw Error(ErrorKind::guard_exceeded, std::to_string(count) + " subsets exceed the disjoint-subset guard of " +
                                                   std::to_string(guards.disjoint_subsets));
    }
    const auto g = intersection_graph(s);
    std::vector<std::uint64_t> nbr(count, 0);
    for (std::size_t i = 0; i < count; ++i) {
        for (auto j : g.adjacency[i]) nbr[i] |= std::uint64_t{1} << j;
    }

    std::uint64_t best = 0;
    auto search = [&](auto&& self, std::uint64_t chosen, std::uint64_t open) -> void {
        if (open == 0) {
            if (std::popcount(chosen) > std::popcount(best)) best = chosen;
            return;
        }
        if (std::popcount(chosen) + std::popcount(open) <= std::popcount(best)) return;
        const auto v = static_cast<std::size_t>(std::countr_zero(open));
        const std::uint64_t bit = std::uint64_t{1} << v;
        self(self, chosen | bit, open & ~bit & ~nbr[v]);
        // Skipping v only helps if some neighbour of v can take its place.
        if ((open & nbr[v]) != 0) self(self, chosen, open & ~bit);
    };
    const std::uint64_t all = count == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1);
    search(search, 0, all);

    DisjointSubsets out;
    for (std::uint64_t m = best; m != 0; m &= m - 1) out.witness.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    out.count = out.witness.size();
    return out;
}

}  // namespace lrc
