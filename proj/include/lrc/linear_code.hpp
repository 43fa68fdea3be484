#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lrc/error.hpp"
#include "lrc/gf2.hpp"

namespace lrc {

/// A binary [n,k] code carrying both a generator basis and a parity-check
/// basis. Both are kept in reduced row echelon form, so two codes with the
/// same row space have identical generator matrices.
class LinearCode {
public:
    static LinearCode from_parity(const BitMatrix& h) {
        if (h.cols() == 0) throw Error(ErrorKind::invalid_argument, "parity-check matrix has no columns");
        auto parity = h.echelon().matrix;
        auto generator = parity.nullspace().echelon().matrix;
        return LinearCode(std::move(generator), std::move(parity));
    }

    static LinearCode from_generator(const BitMatrix& g) {
        if (g.cols() == 0) throw Error(ErrorKind::invalid_argument, "generator matrix has no columns");
        auto generator = g.echelon().matrix;
        auto parity = generator.nullspace().echelon().matrix;
        return LinearCode(std::move(generator), std::move(parity));
    }

    /// Both matrices supplied, e.g. from a file. They must describe the same code.
    static LinearCode from_matrices(const BitMatrix& g, const BitMatrix& h) {
        if (g.cols() != h.cols()) throw Error(ErrorKind::length_mismatch, "generator and parity widths differ");
        auto code = from_generator(g);
        if (h.echelon().matrix != code.parity_) {
            throw Error(ErrorKind::inconsistent_input, "parity-check matrix is not the dual of the generator");
        }
        return code;
    }

    /// The zero code {0} of length n.
    static LinearCode zero(std::size_t n) { return from_parity(BitMatrix::identity(n)); }
    /// The whole space GF(2)^n.
    static LinearCode full(std::size_t n) { return from_generator(BitMatrix::identity(n)); }

    [[nodiscard]] std::size_t length() const noexcept { return generator_.cols(); }
    [[nodiscard]] std::size_t dimension() const noexcept { return generator_.rows(); }
    [[nodiscard]] std::size_t redundancy() const noexcept { return parity_.rows(); }
    [[nodiscard]] bool is_degenerate() const noexcept { return dimension() == 0; }

    [[nodiscard]] const BitMatrix& generator() const noexcept { return generator_; }
    [[nodiscard]] const BitMatrix& parity() const noexcept { return parity_; }

    [[nodiscard]] BitVector syndrome(const BitVector& x) const { return parity_.multiply(x); }
    [[nodiscard]] bool contains(const BitVector& x) const { return syndrome(x).none(); }

    friend bool operator==(const LinearCode&, const LinearCode&) = default;

private:
    LinearCode(BitMatrix generator, BitMatrix parity)
        : generator_(std::move(generator)), parity_(std::move(parity)) {
        check_invariants();
    }

    void check_invariants() const {
        const std::size_t n = generator_.cols();
        if (parity_.cols() != n) throw Error(ErrorKind::inconsistent_input, "generator and parity widths differ");
        if (generator_.rows() + parity_.rows() != n) {
            throw Error(ErrorKind::inconsistent_input, "dim(code) + dim(dual) != n");
        }
        if (!generator_.multiply_transpose(parity_).is_zero()) {
            throw Error(ErrorKind::inconsistent_input, "generator is not orthogonal to parity");
        }
    }

    BitMatrix generator_;
    BitMatrix parity_;
};

inline LinearCode dual(const LinearCode& c) { return LinearCode::from_generator(c.parity()); }

inline LinearCode direct_sum(std::span<const LinearCode> codes) {
    if (codes.empty()) throw Error(ErrorKind::invalid_argument, "direct sum of an empty list");
    BitMatrix g = codes.front().generator();
    for (std::size_t i = 1; i < codes.size(); ++i) g = g.block_diagonal(codes[i].generator());
    return LinearCode::from_generator(g);
}

/// `copies` copies of the same code.
inline LinearCode direct_power(const LinearCode& c, std::size_t copies) {
    if (copies == 0) throw Error(ErrorKind::invalid_argument, "direct power needs at least one copy");
    std::vector<LinearCode> parts(copies, c);
    return direct_sum(parts);
}

/// Row-space equality of the generators.
inline bool codes_equal(const LinearCode& a, const LinearCode& b) {
    if (a.length() != b.length()) throw Error(ErrorKind::length_mismatch, "codes have different lengths");
    return a.generator() == b.generator();
}

/// Coordinate i of `c` becomes coordinate perm[i].
inline LinearCode permute_coordinates(const LinearCode& c, std::span<const std::size_t> perm) {
    return LinearCode::from_generator(c.generator().permute_columns(perm));
}

/// Rate as the pair (k, n).
inline std::pair<std::size_t, std::size_t> rate(const LinearCode& c) { return {c.dimension(), c.length()}; }

/// Visits every vector in the row space of `basis` exactly once, starting
/// at zero, walking a binary reflected Gray code so that each step is a
/// single row addition.
template <class Visitor>
void for_each_codeword(const BitMatrix& basis, Visitor&& visit) {
    BitVector word(basis.cols());
    visit(static_cast<const BitVector&>(word));
    const std::size_t k = basis.rows();
    if (k == 0) return;
    if (k >= 64) throw Error(ErrorKind::guard_exceeded, "cannot walk 2^" + std::to_string(k) + " codewords");
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t step = 1; step < total; ++step) {
        word ^= basis.row(static_cast<std::size_t>(std::countr_zero(step)));
        visit(static_cast<const BitVector&>(word));
    }
}

}  // namespace lrc
