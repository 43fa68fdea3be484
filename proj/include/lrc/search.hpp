#pragma once

// Exhaustive enumeration of exact-covering systems up to point relabeling,
// and the rate-optimality check built on it.
//
// Generation fixes the subsets through point 0 to the star {0,1..r},
// {0,r+1..2r}, ... (every system has such a relabeling), then completes the
// lowest point still short of t subsets, adding its subsets in increasing
// mask order. Completed systems are reduced to a canonical form and
// deduplicated.
//
// The canonical form is the minimum, over all traversal labelings, of the
// relabeled subsets listed in visiting order. A traversal labels a root 0,
// then repeatedly takes the lowest labeled point with unvisited subsets,
// orders those subsets and labels their new points in order; a new root is
// picked when a component is exhausted. Isomorphic systems have the same
// set of traversals, so the minimum is an invariant, and since each subset
// is fixed when visited, prefixes above the best so far are cut.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lrc/bounds.hpp"
#include "lrc/covering.hpp"
#include "lrc/error.hpp"
#include "lrc/families.hpp"
#include "lrc/guards.hpp"

namespace lrc {

using PointMask = std::uint32_t;

inline std::vector<PointMask> subset_masks(const CoveringSystem& s) {
    if (s.n > 32) throw Error(ErrorKind::guard_exceeded, "subset masks need n <= 32");
    std::vector<PointMask> out;
    for (const auto& sub : s.subsets) {
        PointMask m = 0;
        for (auto p : sub) m |= PointMask{1} << p;
        out.push_back(m);
    }
    return out;
}

/// Subsets listed in lexicographic order of their sorted points.
inline CoveringSystem system_from_masks(std::size_t n, const std::vector<PointMask>& masks) {
    CoveringSystem s{n, {}};
    for (auto m : masks) {
        std::vector<std::size_t> sub;
        for (PointMask x = m; x != 0; x &= x - 1) sub.push_back(static_cast<std::size_t>(std::countr_zero(x)));
        s.subsets.push_back(std::move(sub));
    }
    std::sort(s.subsets.begin(), s.subsets.end());
    return s;
}

struct CanonicalForm {
    std::vector<PointMask> key;       // relabeled subsets in visiting order
    std::vector<std::size_t> label;   // point i of the input becomes label[i]

    [[nodiscard]] CoveringSystem system(std::size_t n) const { return system_from_masks(n, key); }
};

namespace detail {

class Canonicalizer {
public:
    explicit Canonicalizer(const CoveringSystem& s)
        : n_(s.n), masks_(subset_masks(s)), through_(s.n), label_(s.n, unset), visited_(masks_.size(), false) {
        for (std::size_t b = 0; b < masks_.size(); ++b) {
            for (PointMask x = masks_[b]; x != 0; x &= x - 1) through_[std::countr_zero(x)].push_back(b);
        }
    }

    CanonicalForm run() {
        extend(0);
        return {best_, best_label_};
    }

private:
    static constexpr std::size_t unset = static_cast<std::size_t>(-1);

    void extend(std::size_t next_label) {
        for (std::size_t i = 0; i < order_.size(); ++i) {
            std::vector<std::size_t> open;
            for (auto b : through_[order_[i]]) {
                if (!visited_[b]) open.push_back(b);
            }
            if (open.empty()) continue;
            std::vector<bool> used(open.size(), false);
            place(open, used, 0, next_label);
            return;
        }
        if (next_label < n_) {
            for (std::size_t p = 0; p < n_; ++p) {
                if (label_[p] != unset) continue;
                assign(p, next_label);
                extend(next_label + 1);
                unassign(p);
            }
            return;
        }
        if (best_label_.empty() || sequence_ < best_) {
            best_ = sequence_;
            best_label_ = label_;
        }
    }

    // Chooses which open subset comes next and an order for its new points.
    void place(const std::vector<std::size_t>& open, std::vector<bool>& used, std::size_t placed,
               std::size_t next_label) {
        if (placed == open.size()) {
            extend(next_label);
            return;
        }
        for (std::size_t j = 0; j < open.size(); ++j) {
            if (used[j]) continue;
            const auto b = open[j];
            std::vector<std::size_t> fresh;
            for (PointMask x = masks_[b]; x != 0; x &= x - 1) {
                const auto p = static_cast<std::size_t>(std::countr_zero(x));
                if (label_[p] == unset) fresh.push_back(p);
            }
            used[j] = true;
            visited_[b] = true;
            do {
                for (std::size_t i = 0; i < fresh.size(); ++i) assign(fresh[i], next_label + i);
                sequence_.push_back(relabel(masks_[b]));
                if (!prefix_above_best()) place(open, used, placed + 1, next_label + fresh.size());
                sequence_.pop_back();
                for (auto it = fresh.rbegin(); it != fresh.rend(); ++it) unassign(*it);
            } while (std::next_permutation(fresh.begin(), fresh.end()));
            visited_[b] = false;
            used[j] = false;
        }
    }

    [[nodiscard]] bool prefix_above_best() const {
        if (best_label_.empty()) return false;
        return std::lexicographical_compare(best_.begin(), best_.begin() + static_cast<std::ptrdiff_t>(sequence_.size()),
                                            sequence_.begin(), sequence_.end());
    }

    [[nodiscard]] PointMask relabel(PointMask m) const {
        PointMask out = 0;
        for (PointMask x = m; x != 0; x &= x - 1) out |= PointMask{1} << label_[std::countr_zero(x)];
        return out;
    }

    void assign(std::size_t p, std::size_t l) {
        label_[p] = l;
        order_.push_back(p);
    }

    void unassign(std::size_t p) {
        label_[p] = unset;
        order_.pop_back();
    }

    std::size_t n_;
    std::vector<PointMask> masks_;
    std::vector<std::vector<std::size_t>> through_;
    std::vector<std::size_t> label_;
    std::vector<bool> visited_;
    std::vector<std::size_t> order_;     // points in label order
    std::vector<PointMask> sequence_;    // relabeled subsets in visiting order
    std::vector<PointMask> best_;
    std::vector<std::size_t> best_label_;
};

}  // namespace detail

/// Requires every point to lie in at least one subset.
inline CanonicalForm canonical_form(const CoveringSystem& s) {
    s.validate();
    const auto cover = s.coverage();
    if (std::find(cover.begin(), cover.end(), 0u) != cover.end()) {
        throw Error(ErrorKind::precondition_violated, "canonical form needs every point covered");
    }
    return detail::Canonicalizer(s).run();
}

inline bool isomorphic(const CoveringSystem& a, const CoveringSystem& b) {
    return a.n == b.n && a.size() == b.size() && canonical_form(a).key == canonical_form(b).key;
}

struct Enumeration {
    std::size_t n = 0;
    std::size_t r = 0;
    std::size_t t = 0;
    std::vector<CoveringSystem> systems;  // one per isomorphism class, canonical, in key order
    std::uint64_t labeled_visits = 0;     // completed systems before deduplication
};

inline void check_search_guard(std::size_t n, std::size_t t, const Guards& guards) {
    const std::size_t limit = t <= 2 ? guards.search_points_t2 : guards.search_points_t3;
    if (n > limit || n > 32) {
        throw Error(ErrorKind::guard_exceeded, "exact-covering search at n = " + std::to_string(n) + ", t = " +
                                                   std::to_string(t) + " exceeds the guard n <= " + std::to_string(limit));
    }
}

inline Enumeration enumerate_exact_covering_systems(std::size_t n, std::size_t r, std::size_t t,
                                                    const Guards& guards = {}) {
    if (n == 0 || r == 0 || t == 0) throw Error(ErrorKind::invalid_argument, "n, r and t must be positive");
    if ((n * t) % (r + 1) != 0) {
        throw Error(ErrorKind::non_integral_count, "nt/(r+1) = " + std::to_string(n * t) + "/" + std::to_string(r + 1) +
                                                       " is not an integer");
    }
    check_search_guard(n, t, guards);

    Enumeration out{n, r, t, {}, 0};
    if (t * r + 1 > n) return out;  // the subsets through one point need tr other points

    std::vector<std::size_t> deg(n, 0);
    std::vector<PointMask> adj(n, 0);  // points already sharing a subset with p
    std::vector<PointMask> blocks;
    std::map<std::vector<PointMask>, bool> seen;

    auto add = [&](PointMask b) {
        blocks.push_back(b);
        for (PointMask x = b; x != 0; x &= x - 1) {
            const auto p = std::countr_zero(x);
            ++deg[p];
            adj[p] |= b;
        }
    };
    auto remove = [&](PointMask b) {
        blocks.pop_back();
        for (PointMask x = b; x != 0; x &= x - 1) {
            const auto p = std::countr_zero(x);
            --deg[p];
            adj[p] &= ~b;
        }
    };

    for (std::size_t j = 0; j < t; ++j) {
        PointMask b = 1;
        for (std::size_t i = 1; i <= r; ++i) b |= PointMask{1} << (j * r + i);
        add(b);
    }

    auto dfs = [&](auto&& self, std::size_t phase, PointMask floor) -> void {
        std::size_t p = 0;
        while (p < n && deg[p] == t) ++p;
        if (p == n) {
            ++out.labeled_visits;
            auto form = canonical_form(system_from_masks(n, blocks));
            seen.emplace(std::move(form.key), true);
            return;
        }
        PointMask cand = 0;
        for (std::size_t q = p + 1; q < n; ++q) {
            if (deg[q] < t && !((adj[p] >> q) & 1u)) cand |= PointMask{1} << q;
        }
        if (static_cast<std::size_t>(std::popcount(cand)) < (t - deg[p]) * r) return;

        // r-subsets of cand that are pairwise new pairs
        auto choose = [&](auto&& pick, PointMask chosen, PointMask avail, std::size_t left) -> void {
            if (left == 0) {
                const PointMask b = chosen | (PointMask{1} << p);
                if (phase == p && b <= floor) return;
                add(b);
                self(self, p, b);
                remove(b);
                return;
            }
            for (PointMask x = avail; x != 0; x &= x - 1) {
                const auto q = std::countr_zero(x);
                const PointMask rest = (x & (x - 1)) & ~adj[q];
                if (static_cast<std::size_t>(std::popcount(rest)) + 1 < left) continue;
                pick(pick, chosen | (PointMask{1} << q), rest, left - 1);
            }
        };
        choose(choose, 0, cand, r);
    };
    dfs(dfs, n, 0);

    for (const auto& [key, unused] : seen) out.systems.push_back(system_from_masks(n, key));
    return out;
}

// ---------------------------------------------------------------------------
// Rate optimality

/// A named construction: "complete:q" (vertex stars of K_q) or "fano",
/// optionally with "^c" for c disjoint copies.
struct NamedConstruction {
    std::string label;
    CoveringSystem system;
};

inline NamedConstruction parse_construction(std::string_view text) {
    std::size_t copies = 1;
    std::string_view base = text;
    if (const auto caret = text.find('^'); caret != std::string_view::npos) {
        base = text.substr(0, caret);
        try {
            copies = static_cast<std::size_t>(std::stoull(std::string(text.substr(caret + 1))));
        } catch (const std::exception&) {
            throw Error(ErrorKind::parse_error, "bad copy count in '" + std::string(text) + "'");
        }
        if (copies == 0) throw Error(ErrorKind::invalid_parameter, "copy count must be positive");
    }
    CoveringSystem one;
    std::string label;
    if (base == "fano") {
        one = fano_covering_system();
        label = "fano";
    } else if (base.substr(0, 9) == "complete:") {
        std::size_t q = 0;
        try {
            q = static_cast<std::size_t>(std::stoull(std::string(base.substr(9))));
        } catch (const std::exception&) {
            throw Error(ErrorKind::parse_error, "bad complete-graph order in '" + std::string(text) + "'");
        }
        one = complete_star_system(q);
        label = "complete:" + std::to_string(q);
    } else {
        throw Error(ErrorKind::unknown_name, "no construction named '" + std::string(text) + "'");
    }
    CoveringSystem all = one;
    for (std::size_t c = 1; c < copies; ++c) all = all.direct_sum(one);
    if (copies > 1) label += "^" + std::to_string(copies);
    return {label, all};
}

/// Copies of a construction filling n points, if its size divides n.
inline std::optional<NamedConstruction> construction_for_length(std::string_view base, std::size_t n) {
    const auto one = parse_construction(base);
    if (one.system.n == 0 || n % one.system.n != 0) return std::nullopt;
    const auto copies = n / one.system.n;
    if (copies == 1) return one;
    return parse_construction(std::string(base) + "^" + std::to_string(copies));
}

/// Named constructions with the given parameters on n points.
inline std::vector<NamedConstruction> known_constructions(std::size_t n, std::size_t r, std::size_t t) {
    std::vector<NamedConstruction> out;
    if (t == 2 && r >= 1) {
        if (auto c = construction_for_length("complete:" + std::to_string(r + 2), n)) out.push_back(std::move(*c));
    }
    if (r == 2 && t == 3) {
        if (auto c = construction_for_length("fano", n)) out.push_back(std::move(*c));
    }
    return out;
}

struct SearchOptimum {
    CoveringSystem system;       // canonical form
    std::size_t rank = 0;        // GF(2) rank of the subsets
    std::string classification;  // a construction label or "unclassified"
};

struct SearchReport {
    std::size_t n = 0;
    std::size_t r = 0;
    std::size_t t = 0;
    std::size_t system_count = 0;
    std::optional<Rational> max_dual_rate;  // none when no system exists
    std::vector<SearchOptimum> optima;
    bool exhausted = false;
    std::optional<Rational> expected_rate;
    std::optional<std::string> expected_construction;

    [[nodiscard]] bool rate_as_expected() const { return !expected_rate || (max_dual_rate && *max_dual_rate == *expected_rate); }

    [[nodiscard]] bool optima_as_expected() const {
        if (!expected_construction) return true;
        if (optima.empty()) return false;
        return std::all_of(optima.begin(), optima.end(),
                           [&](const SearchOptimum& o) { return o.classification == *expected_construction; });
    }

    [[nodiscard]] bool expectations_met() const { return exhausted && rate_as_expected() && optima_as_expected(); }
};

/// Enumerates every exact-covering system at (n, r, t), finds the largest
/// rate 1 - rank/n of the code they define as parity checks, and classifies
/// each maximizer against the known constructions and `expected`.
inline SearchReport verify_rate_optimal_unique(std::size_t n, std::size_t r, std::size_t t,
                                               std::optional<Rational> expected_rate = {},
                                               std::optional<std::string> expected = {}, const Guards& guards = {}) {
    std::vector<NamedConstruction> named = known_constructions(n, r, t);
    std::optional<std::string> expected_label;
    if (expected) {
        auto parsed = expected->find('^') == std::string::npos ? construction_for_length(*expected, n)
                                                                : std::optional(parse_construction(*expected));
        if (!parsed || parsed->system.n != n) {
            throw Error(ErrorKind::invalid_parameter, "construction '" + *expected + "' does not fit n = " + std::to_string(n));
        }
        expected_label = parsed->label;
        const bool listed = std::any_of(named.begin(), named.end(), [&](const auto& c) { return c.label == parsed->label; });
        if (!listed) named.push_back(std::move(*parsed));
    }
    std::vector<std::pair<std::vector<PointMask>, std::string>> keys;
    for (const auto& c : named) keys.emplace_back(canonical_form(c.system).key, c.label);

    const auto all = enumerate_exact_covering_systems(n, r, t, guards);
    SearchReport report;
    report.n = n;
    report.r = r;
    report.t = t;
    report.system_count = all.systems.size();
    report.exhausted = true;
    report.expected_rate = std::move(expected_rate);
    report.expected_construction = expected_label;

    std::size_t best_rank = 0;
    std::vector<std::pair<const CoveringSystem*, std::size_t>> ranked;
    for (const auto& s : all.systems) {
        const auto rank = s.matrix().rank();
        ranked.emplace_back(&s, rank);
        if (ranked.size() == 1 || rank < best_rank) best_rank = rank;
    }
    if (!ranked.empty()) report.max_dual_rate = 1 - Rational(best_rank, n);
    for (const auto& [s, rank] : ranked) {
        if (rank != best_rank) continue;
        const auto key = canonical_form(*s).key;
        std::string cls = "unclassified";
        for (const auto& [k, label] : keys) {
            if (k == key) {
                cls = label;
                break;
            }
        }
        report.optima.push_back({*s, rank, cls});
    }
    return report;
}

}  // namespace lrc
