#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lrc/error.hpp"
#include "lrc/guards.hpp"
#include "lrc/linear_code.hpp"

namespace lrc {

using Count = boost::multiprecision::cpp_int;

/// Codeword counts A_0..A_n by Hamming weight.
struct WeightEnumerator {
    std::size_t n = 0;
    std::vector<Count> counts;

    [[nodiscard]] Count total() const {
        Count sum = 0;
        for (const auto& a : counts) sum += a;
        return sum;
    }

    /// Smallest nonzero weight with a codeword, or 0 when only A_0 is set.
    [[nodiscard]] std::size_t min_nonzero_weight() const {
        for (std::size_t w = 1; w < counts.size(); ++w) {
            if (counts[w] != 0) return w;
        }
        return 0;
    }

    /// "1+4z^3+3z^4"
    [[nodiscard]] std::string polynomial() const {
        std::string out;
        for (std::size_t w = 0; w < counts.size(); ++w) {
            if (counts[w] == 0) continue;
            if (!out.empty()) out += '+';
            if (w == 0) {
                out += counts[w].str();
                continue;
            }
            if (counts[w] != 1) out += counts[w].str();
            out += "z";
            if (w > 1) out += "^" + std::to_string(w);
        }
        return out;
    }

    friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

inline WeightEnumerator make_enumerator(std::size_t n, const std::vector<std::uint64_t>& counts) {
    WeightEnumerator we{n, std::vector<Count>(n + 1, 0)};
    for (std::size_t w = 0; w < counts.size() && w <= n; ++w) we.counts[w] = counts[w];
    return we;
}

inline void check_enumeration_guard(const LinearCode& c, const Guards& guards) {
    if (c.dimension() > guards.enumerator_dimension) {
        throw Error(ErrorKind::guard_exceeded, "k = " + std::to_string(c.dimension()) +
                                                   " exceeds the enumeration guard of " +
                                                   std::to_string(guards.enumerator_dimension));
    }
}

inline WeightEnumerator weight_enumerator(const LinearCode& c, const Guards& guards = {}) {
    check_enumeration_guard(c, guards);
    std::vector<std::uint64_t> counts(c.length() + 1, 0);
    for_each_codeword(c.generator(), [&](const BitVector& word) { ++counts[word.weight()]; });
    return make_enumerator(c.length(), counts);
}

inline std::size_t min_distance(const LinearCode& c, const Guards& guards = {}) {
    if (c.dimension() == 0) throw Error(ErrorKind::invalid_argument, "minimum distance of the zero code is undefined");
    check_enumeration_guard(c, guards);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for_each_codeword(c.generator(), [&](const BitVector& word) {
        const auto w = word.weight();
        if (w != 0 && w < best) best = w;
    });
    return best;
}

namespace detail {

inline Count binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Count b = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;
    }
    return b;
}

/// Krawtchouk polynomial K_j(i) for length n.
inline Count krawtchouk(std::size_t n, std::size_t j, std::size_t i) {
    Count sum = 0;
    for (std::size_t s = 0; s <= j; ++s) {
        Count term = binomial(i, s) * binomial(n - i, j - s);
        if (s % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

}  // namespace detail

/// Enumerator of the dual of a k-dimensional code with enumerator `w`.
inline WeightEnumerator macwilliams(const WeightEnumerator& w, std::size_t k) {
    if (w.counts.size() != w.n + 1) throw Error(ErrorKind::inconsistent_input, "enumerator needs n+1 counts");
    const Count size = Count(1) << k;
    if (w.total() != size) {
        throw Error(ErrorKind::inconsistent_input, "counts sum to " + w.total().str() + ", not 2^" + std::to_string(k));
    }
    WeightEnumerator out{w.n, std::vector<Count>(w.n + 1, 0)};
    for (std::size_t j = 0; j <= w.n; ++j) {
        Count sum = 0;
        for (std::size_t i = 0; i <= w.n; ++i) {
            if (w.counts[i] != 0) sum += w.counts[i] * detail::krawtchouk(w.n, j, i);
        }
        if (sum < 0 || sum % size != 0) {
            throw Error(ErrorKind::inconsistent_input, "transform is not a valid enumerator at weight " + std::to_string(j));
        }
        out.counts[j] = sum / size;
    }
    return out;
}

}  // namespace lrc
