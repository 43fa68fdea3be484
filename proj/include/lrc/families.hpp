#pragma once

// Complete-graph, Simplex and Hamming codes, the Fano plane, and the
// transpose transform on exact-covering parity-check matrices.

#include <cstddef>
#include <string>
#include <vector>

#include "lrc/covering.hpp"
#include "lrc/error.hpp"
#include "lrc/gf2.hpp"
#include "lrc/graph.hpp"
#include "lrc/linear_code.hpp"

namespace lrc {

/// Cycle code of K_q, [q(q-1)/2, (q-1)(q-2)/2]. Its dual, spanned by the
/// vertex stars, is the [q(q-1)/2, q-1] code with (q-2, 2)-availability.
inline LinearCode complete_graph_code(std::size_t q) {
    if (q < 3) throw Error(ErrorKind::invalid_argument, "complete graph code needs q >= 3");
    return graph_code(complete_graph(q));
}

/// Vertex stars of K_q over its edges: q subsets of size q-1, every edge
/// covered twice.
inline CoveringSystem complete_star_system(std::size_t q) {
    if (q < 3) throw Error(ErrorKind::invalid_argument, "complete star system needs q >= 3");
    return covering_system_from_matrix(incidence_matrix(complete_graph(q)));
}

/// Generator columns are the nonzero m-bit vectors; column j (0-based)
/// holds the binary expansion of j+1, bit i in row i.
inline LinearCode simplex_code(std::size_t m) {
    if (m < 2) throw Error(ErrorKind::invalid_argument, "Simplex code needs m >= 2");
    if (m > 20) throw Error(ErrorKind::guard_exceeded, "Simplex code length 2^m - 1 too large");
    const std::size_t n = (std::size_t{1} << m) - 1;
    BitMatrix g(m, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
            if (((j + 1) >> i) & 1u) g.set(i, j);
        }
    }
    return LinearCode::from_generator(g);
}

inline LinearCode hamming_code(std::size_t m) { return dual(simplex_code(m)); }

/// All triples {a, b, a^b} of nonzero m-bit labels, as 0-based points
/// (label - 1): the weight-3 codewords of the Hamming code, i.e. the lines of
/// the projective geometry PG(m-1, 2). Each point lies on 2^(m-1) - 1 lines.
inline CoveringSystem simplex_line_system(std::size_t m) {
    if (m < 2) throw Error(ErrorKind::invalid_argument, "line system needs m >= 2");
    const std::size_t n = (std::size_t{1} << m) - 1;
    CoveringSystem s{n, {}};
    for (std::size_t a = 1; a <= n; ++a) {
        for (std::size_t b = a + 1; b <= n; ++b) {
            const std::size_t c = a ^ b;
            if (c > b) s.subsets.push_back({a - 1, b - 1, c - 1});
        }
    }
    return s;
}

/// The seven lines of the Fano plane; point p (0-based) carries label p+1,
/// and three points are collinear when their labels XOR to zero.
inline CoveringSystem fano_covering_system() { return simplex_line_system(3); }

/// Validates that `h` is an exact-covering parity-check matrix and returns
/// its transpose. An (r,t) exact covering on n points becomes a (t-1, r+1)
/// exact covering on nt/(r+1) points.
inline BitMatrix transpose_transform(const BitMatrix& h) {
    const auto params = uniform_covering_params(h);
    if (!params) throw Error(ErrorKind::not_exact_covering, "row or column weights are not uniform");
    const auto report = check_exact_covering(covering_system_from_matrix(h), params->r, params->t);
    if (!report.valid) {
        throw Error(ErrorKind::not_exact_covering,
                    std::string("violates ") + to_string(report.violations.front().kind) + " for (r,t) = (" +
                        std::to_string(params->r) + "," + std::to_string(params->t) + ")");
    }
    return h.transpose();
}

}  // namespace lrc
