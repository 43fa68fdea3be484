#pragma once

// Bit-packed vectors and matrices over GF(2).
//
// Coordinates are 0-based in the C++ API. Textual forms ("0110...") list
// coordinate 0 first; external file formats shift to 1-based indices.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lrc/error.hpp"

namespace lrc {

class BitVector {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

    static BitVector from_string(std::string_view bits) {
        BitVector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] == '1') {
                v.set(i);
            } else if (bits[i] != '0') {
                throw Error(ErrorKind::parse_error, "bitstring contains '" + std::string(1, bits[i]) + "'");
            }
        }
        return v;
    }

    static BitVector from_support(std::size_t length, std::span<const std::size_t> support) {
        BitVector v(length);
        for (auto i : support) {
            if (i >= length) throw Error(ErrorKind::index_out_of_range, "support index beyond vector length");
            v.set(i);
        }
        return v;
    }

    /// Low `length` bits of `mask`, bit i of the mask becoming coordinate i.
    static BitVector from_mask(std::size_t length, word_type mask) {
        BitVector v(length);
        if (length > 0) v.words_[0] = mask & tail_mask(std::min(length, word_bits));
        return v;
    }

    [[nodiscard]] std::size_t size() const noexcept { return length_; }
    [[nodiscard]] bool empty() const noexcept { return length_ == 0; }

    [[nodiscard]] bool test(std::size_t i) const noexcept { return (words_[i / word_bits] >> (i % word_bits)) & 1u; }
    void set(std::size_t i, bool value = true) noexcept {
        const word_type bit = word_type{1} << (i % word_bits);
        if (value) {
            words_[i / word_bits] |= bit;
        } else {
            words_[i / word_bits] &= ~bit;
        }
    }
    void flip(std::size_t i) noexcept { words_[i / word_bits] ^= word_type{1} << (i % word_bits); }
    void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

    [[nodiscard]] std::size_t weight() const noexcept {
        std::size_t w = 0;
        for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
        return w;
    }
    [[nodiscard]] bool any() const noexcept {
        return std::any_of(words_.begin(), words_.end(), [](word_type w) { return w != 0; });
    }
    [[nodiscard]] bool none() const noexcept { return !any(); }

    /// Smallest set coordinate, or size() when the vector is zero.
    [[nodiscard]] std::size_t first_set() const noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] != 0) return w * word_bits + static_cast<std::size_t>(std::countr_zero(words_[w]));
        }
        return length_;
    }

    [[nodiscard]] std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            for (word_type word = words_[w]; word != 0; word &= word - 1) {
                out.push_back(w * word_bits + static_cast<std::size_t>(std::countr_zero(word)));
            }
        }
        return out;
    }

    /// Inner product over GF(2).
    [[nodiscard]] bool dot(const BitVector& other) const {
        check_same_length(other);
        word_type acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
        return std::popcount(acc) & 1;
    }

    [[nodiscard]] std::size_t intersection_weight(const BitVector& other) const {
        check_same_length(other);
        std::size_t n = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            n += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
        }
        return n;
    }

    BitVector& operator^=(const BitVector& other) {
        check_same_length(other);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }
    BitVector& operator&=(const BitVector& other) {
        check_same_length(other);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
        return *this;
    }
    BitVector& operator|=(const BitVector& other) {
        check_same_length(other);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

    /// Concatenation: coordinates of `other` follow those of this vector.
    [[nodiscard]] BitVector concat(const BitVector& other) const {
        BitVector out(length_ + other.length_);
        for (auto i : support()) out.set(i);
        for (auto i : other.support()) out.set(length_ + i);
        return out;
    }

    /// Coordinates listed in `coords`, in that order.
    [[nodiscard]] BitVector restrict_to(std::span<const std::size_t> coords) const {
        BitVector out(coords.size());
        for (std::size_t j = 0; j < coords.size(); ++j) {
            if (test(coords[j])) out.set(j);
        }
        return out;
    }

    /// Coordinate i moves to position perm[i].
    [[nodiscard]] BitVector permuted(std::span<const std::size_t> perm) const {
        if (perm.size() != length_) throw Error(ErrorKind::length_mismatch, "permutation length differs from vector length");
        BitVector out(length_);
        for (auto i : support()) out.set(perm[i]);
        return out;
    }

    /// First word, i.e. coordinates 0..63 as a mask.
    [[nodiscard]] word_type low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

    [[nodiscard]] std::span<const word_type> words() const noexcept { return words_; }

    [[nodiscard]] std::string to_string() const {
        std::string s(length_, '0');
        for (auto i : support()) s[i] = '1';
        return s;
    }

private:
    static std::size_t word_count(std::size_t length) { return (length + word_bits - 1) / word_bits; }
    static word_type tail_mask(std::size_t bits) {
        return bits >= word_bits ? ~word_type{0} : ((word_type{1} << bits) - 1);
    }
    void check_same_length(const BitVector& other) const {
        if (other.length_ != length_) throw Error(ErrorKind::length_mismatch, "vector lengths differ");
    }

    std::size_t length_ = 0;
    std::vector<word_type> words_;
};

/// Orders vectors by their sorted supports, lexicographically.
inline bool support_less(const BitVector& a, const BitVector& b) {
    const auto sa = a.support();
    const auto sb = b.support();
    return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
}

class BitMatrix;

/// Reduced row echelon form: nonzero rows only, with one pivot column per row.
struct EchelonForm;

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    static BitMatrix from_rows(std::size_t cols, std::vector<BitVector> rows) {
        for (const auto& row : rows) {
            if (row.size() != cols) throw Error(ErrorKind::length_mismatch, "row length differs from column count");
        }
        BitMatrix m;
        m.cols_ = cols;
        m.rows_ = std::move(rows);
        return m;
    }

    static BitMatrix from_strings(std::span<const std::string> rows) {
        if (rows.empty()) throw Error(ErrorKind::invalid_argument, "cannot infer column count from zero rows");
        std::vector<BitVector> parsed;
        parsed.reserve(rows.size());
        for (const auto& r : rows) parsed.push_back(BitVector::from_string(r));
        const std::size_t cols = parsed.front().size();
        return from_rows(cols, std::move(parsed));
    }

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i);
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    [[nodiscard]] const BitVector& row(std::size_t i) const { return rows_.at(i); }
    [[nodiscard]] BitVector& row(std::size_t i) { return rows_.at(i); }
    [[nodiscard]] const std::vector<BitVector>& row_vectors() const noexcept { return rows_; }

    [[nodiscard]] bool test(std::size_t i, std::size_t j) const { return rows_.at(i).test(j); }
    void set(std::size_t i, std::size_t j, bool value = true) { rows_.at(i).set(j, value); }

    void append_row(BitVector row) {
        if (row.size() != cols_) throw Error(ErrorKind::length_mismatch, "row length differs from column count");
        rows_.push_back(std::move(row));
    }

    [[nodiscard]] BitVector column(std::size_t j) const {
        BitVector c(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i].test(j)) c.set(i);
        }
        return c;
    }

    [[nodiscard]] BitMatrix transpose() const {
        BitMatrix t(cols_, rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            for (auto j : rows_[i].support()) t.set(j, i);
        }
        return t;
    }

    /// H * x^T, one bit per row of this matrix.
    [[nodiscard]] BitVector multiply(const BitVector& x) const {
        BitVector s(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i].dot(x)) s.set(i);
        }
        return s;
    }

    /// this * other^T.
    [[nodiscard]] BitMatrix multiply_transpose(const BitMatrix& other) const {
        if (other.cols_ != cols_) throw Error(ErrorKind::length_mismatch, "matrix widths differ");
        BitMatrix out(rows_.size(), other.rows());
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            for (std::size_t j = 0; j < other.rows(); ++j) {
                if (rows_[i].dot(other.rows_[j])) out.set(i, j);
            }
        }
        return out;
    }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.none(); });
    }

    [[nodiscard]] std::vector<std::size_t> row_weights() const {
        std::vector<std::size_t> w;
        w.reserve(rows_.size());
        for (const auto& r : rows_) w.push_back(r.weight());
        return w;
    }

    [[nodiscard]] std::vector<std::size_t> column_weights() const {
        std::vector<std::size_t> w(cols_, 0);
        for (const auto& r : rows_) {
            for (auto j : r.support()) ++w[j];
        }
        return w;
    }

    /// Block-diagonal combination of two matrices.
    [[nodiscard]] BitMatrix block_diagonal(const BitMatrix& other) const {
        BitMatrix out;
        out.cols_ = cols_ + other.cols_;
        for (const auto& r : rows_) out.rows_.push_back(r.concat(BitVector(other.cols_)));
        for (const auto& r : other.rows_) out.rows_.push_back(BitVector(cols_).concat(r));
        return out;
    }

    /// Column i moves to position perm[i].
    [[nodiscard]] BitMatrix permute_columns(std::span<const std::size_t> perm) const {
        BitMatrix out;
        out.cols_ = cols_;
        for (const auto& r : rows_) out.rows_.push_back(r.permuted(perm));
        return out;
    }

    [[nodiscard]] EchelonForm echelon() const;
    [[nodiscard]] std::size_t rank() const;
    [[nodiscard]] BitMatrix nullspace() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

struct EchelonForm {
    BitMatrix matrix;                 // rank x cols, fully reduced
    std::vector<std::size_t> pivots;  // pivot column of each row, increasing
};

inline EchelonForm BitMatrix::echelon() const {
    std::vector<BitVector> work = rows_;
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t col = 0; col < cols_ && next < work.size(); ++col) {
        std::size_t pivot = next;
        while (pivot < work.size() && !work[pivot].test(col)) ++pivot;
        if (pivot == work.size()) continue;
        std::swap(work[next], work[pivot]);
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i != next && work[i].test(col)) work[i] ^= work[next];
        }
        pivots.push_back(col);
        ++next;
    }
    work.resize(next);
    return EchelonForm{from_rows(cols_, std::move(work)), std::move(pivots)};
}

inline std::size_t BitMatrix::rank() const {
    std::vector<BitVector> work = rows_;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < work.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < work.size() && !work[pivot].test(col)) ++pivot;
        if (pivot == work.size()) continue;
        std::swap(work[r], work[pivot]);
        for (std::size_t i = r + 1; i < work.size(); ++i) {
            if (work[i].test(col)) work[i] ^= work[r];
        }
        ++r;
    }
    return r;
}

/// Basis of {x : M x^T = 0}, one basis vector per free column.
inline BitMatrix BitMatrix::nullspace() const {
    const auto ef = echelon();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : ef.pivots) is_pivot[p] = true;
    BitMatrix basis(0, cols_);
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        BitVector v(cols_);
        v.set(free);
        for (std::size_t i = 0; i < ef.pivots.size(); ++i) {
            if (ef.matrix.test(i, free)) v.set(ef.pivots[i]);
        }
        basis.append_row(std::move(v));
    }
    return basis;
}

}  // namespace lrc
