#pragma once

// (r,t)-availability. Bit i of a code has t disjoint repair groups of size at
// most r exactly when the dual code holds t words of weight <= r+1 that all
// contain i and pairwise meet only in i. Certificates carry those words.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "lrc/error.hpp"
#include "lrc/gf2.hpp"
#include "lrc/guards.hpp"
#include "lrc/linear_code.hpp"

namespace lrc {

struct RepairGroup {
    std::size_t bit = 0;
    std::vector<std::size_t> members;  // excludes `bit`
};

struct AvailabilityCertificate {
    std::size_t bit = 0;
    std::vector<RepairGroup> groups;
    std::vector<BitVector> witnesses;  // dual codewords, witnesses[j] = groups[j] + {bit}

    /// Size of the largest repair group.
    [[nodiscard]] std::size_t locality() const {
        std::size_t r = 0;
        for (const auto& g : groups) r = std::max(r, g.members.size());
        return r;
    }
};

namespace detail {

inline void check_availability_args(const LinearCode& c, std::size_t r, std::size_t t) {
    if (r == 0) throw Error(ErrorKind::invalid_argument, "locality r must be at least 1");
    if (t == 0) throw Error(ErrorKind::invalid_argument, "availability t must be at least 1");
    if (r >= c.length()) {
        throw Error(ErrorKind::invalid_argument, "locality r = " + std::to_string(r) + " is not below n = " +
                                                     std::to_string(c.length()));
    }
}

inline double choose_estimate(std::size_t n, std::size_t k) {
    double b = 1.0;
    for (std::size_t i = 1; i <= k; ++i) b = b * static_cast<double>(n - k + i) / static_cast<double>(i);
    return b;
}

}  // namespace detail

/// Every dual codeword of weight at most `max_weight`, grouped by the bits
/// they contain and sorted lexicographically by support.
///
/// With n-k up to guards.dual_enumeration the whole dual is listed; beyond
/// that, candidate supports of size <= max_weight are generated directly
/// and kept when orthogonal to the generator.
class RepairCandidates {
public:
    RepairCandidates(const LinearCode& c, std::size_t max_weight, const Guards& guards = {})
        : n_(c.length()), by_bit_(c.length()) {
        std::vector<BitVector> words;
        if (c.redundancy() <= guards.dual_enumeration) {
            for_each_codeword(c.parity(), [&](const BitVector& w) {
                const auto wt = w.weight();
                if (wt > 0 && wt <= max_weight) words.push_back(w);
            });
        } else {
            double total = 0;
            for (std::size_t w = 1; w <= max_weight; ++w) total += detail::choose_estimate(n_, w);
            if (total > static_cast<double>(guards.support_candidates)) {
                throw Error(ErrorKind::guard_exceeded, "dual too large to list and too many supports of weight <= " +
                                                           std::to_string(max_weight) + " to test");
            }
            std::vector<std::size_t> pick;
            BitVector x(n_);
            auto visit = [&](auto&& self, std::size_t start) -> void {
                if (!pick.empty() && c.generator().multiply(x).none()) words.push_back(x);
                if (pick.size() == max_weight) return;
                for (std::size_t p = start; p < n_; ++p) {
                    pick.push_back(p);
                    x.set(p);
                    self(self, p + 1);
                    x.set(p, false);
                    pick.pop_back();
                }
            };
            visit(visit, 0);
        }
        std::sort(words.begin(), words.end(), support_less);
        for (const auto& w : words) {
            for (auto i : w.support()) by_bit_[i].push_back(w);
        }
    }

    [[nodiscard]] const std::vector<BitVector>& containing(std::size_t bit) const { return by_bit_.at(bit); }

    /// First t candidates (in lexicographic search order) pairwise meeting
    /// only in `bit`, or nothing.
    [[nodiscard]] std::optional<std::vector<BitVector>> pack(std::size_t bit, std::size_t t) const {
        const auto& cands = by_bit_.at(bit);
        if (cands.size() < t) return std::nullopt;
        std::vector<std::size_t> chosen;
        BitVector used(n_);
        auto search = [&](auto&& self, std::size_t start) -> bool {
            if (chosen.size() == t) return true;
            for (std::size_t j = start; j + (t - chosen.size()) <= cands.size(); ++j) {
                BitVector rest = cands[j];
                rest.set(bit, false);
                if (rest.intersection_weight(used) != 0) continue;
                chosen.push_back(j);
                used |= rest;
                if (self(self, j + 1)) return true;
                used ^= rest;
                chosen.pop_back();
            }
            return false;
        };
        if (!search(search, 0)) return std::nullopt;
        std::vector<BitVector> out;
        for (auto j : chosen) out.push_back(cands[j]);
        return out;
    }

private:
    std::size_t n_;
    std::vector<std::vector<BitVector>> by_bit_;
};

inline AvailabilityCertificate make_certificate(std::size_t bit, std::vector<BitVector> witnesses) {
    AvailabilityCertificate cert{bit, {}, std::move(witnesses)};
    for (const auto& w : cert.witnesses) {
        RepairGroup g{bit, {}};
        for (auto p : w.support()) {
            if (p != bit) g.members.push_back(p);
        }
        cert.groups.push_back(std::move(g));
    }
    return cert;
}

/// Independent re-check of a certificate against the code's generator.
inline bool certificate_is_valid(const LinearCode& c, const AvailabilityCertificate& cert, std::size_t r, std::size_t t) {
    if (cert.witnesses.size() != t || cert.groups.size() != t || cert.bit >= c.length()) return false;
    for (std::size_t j = 0; j < t; ++j) {
        const auto& w = cert.witnesses[j];
        if (w.size() != c.length() || !w.test(cert.bit) || w.weight() > r + 1) return false;
        if (c.generator().multiply(w).any()) return false;
        auto expected = w.support();
        expected.erase(std::find(expected.begin(), expected.end(), cert.bit));
        if (expected != cert.groups[j].members || cert.groups[j].bit != cert.bit) return false;
        for (std::size_t l = j + 1; l < t; ++l) {
            const auto meet = (w & cert.witnesses[l]);
            if (meet.weight() != 1 || !meet.test(cert.bit)) return false;
        }
    }
    return true;
}

inline std::optional<AvailabilityCertificate> find_repair_groups(const LinearCode& c, std::size_t bit, std::size_t r,
                                                                 std::size_t t, const Guards& guards = {}) {
    detail::check_availability_args(c, r, t);
    if (bit >= c.length()) {
        throw Error(ErrorKind::index_out_of_range, "bit " + std::to_string(bit + 1) + " beyond n = " + std::to_string(c.length()));
    }
    const RepairCandidates cands(c, r + 1, guards);
    auto packed = cands.pack(bit, t);
    if (!packed) return std::nullopt;
    return make_certificate(bit, std::move(*packed));
}

struct AvailabilityReport {
    std::size_t r = 0;
    std::size_t t = 0;
    std::vector<std::optional<AvailabilityCertificate>> bits;

    [[nodiscard]] bool all_certified() const {
        return std::all_of(bits.begin(), bits.end(), [](const auto& b) { return b.has_value(); });
    }
    [[nodiscard]] std::vector<std::size_t> failing_bits() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (!bits[i]) out.push_back(i);
        }
        return out;
    }
};

namespace detail {

/// Runs fn(i) for i in [0, count) on up to `jobs` threads. Each index is
/// handled by exactly one worker, so results do not depend on scheduling.
template <class Fn>
void parallel_for(std::size_t count, std::size_t jobs, Fn&& fn) {
    jobs = std::max<std::size_t>(1, std::min(jobs, count));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += jobs) fn(i);
        });
    }
}

}  // namespace detail

inline AvailabilityReport verify_availability(const LinearCode& c, std::size_t r, std::size_t t,
                                              const Guards& guards = {}, std::size_t jobs = 1) {
    detail::check_availability_args(c, r, t);
    const RepairCandidates cands(c, r + 1, guards);
    AvailabilityReport report{r, t, std::vector<std::optional<AvailabilityCertificate>>(c.length())};
    detail::parallel_for(c.length(), jobs, [&](std::size_t i) {
        if (auto packed = cands.pack(i, t)) report.bits[i] = make_certificate(i, std::move(*packed));
    });
    return report;
}

/// Largest t per bit for locality r, found by binary search on the packing
/// search. Groups may be smaller than r, so the only ceiling is the number of
/// candidate words through the bit.
inline std::vector<std::size_t> availability_profile(const LinearCode& c, std::size_t r, const Guards& guards = {},
                                                     std::size_t jobs = 1) {
    detail::check_availability_args(c, r, 1);
    const RepairCandidates cands(c, r + 1, guards);
    std::vector<std::size_t> best(c.length(), 0);
    detail::parallel_for(c.length(), jobs, [&](std::size_t i) {
        std::size_t lo = 0;  // achievable
        std::size_t hi = cands.containing(i).size();
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo + 1) / 2;
            if (cands.pack(i, mid)) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        best[i] = lo;
    });
    return best;
}

}  // namespace lrc
