// Copyright 2026 The mubforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MUBFORGE_BIT_MATRIX_H
#define MUBFORGE_BIT_MATRIX_H

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mubforge/poly2.h"

namespace mubforge {

/// A vector over F2, packed 64 entries per word. Entry i lives at bit i % 64 of word i / 64.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t length);
    BitVec(std::initializer_list<int> bits);
    /// Parses a string of '0'/'1' characters, first character is entry 0.
    static BitVec from_string(std::string_view text);

    size_t size() const {
        return length_;
    }
    bool get(size_t i) const {
        return (words_[i / 64] >> (i % 64)) & 1;
    }
    void set(size_t i, bool value) {
        uint64_t mask = uint64_t{1} << (i % 64);
        words_[i / 64] = value ? (words_[i / 64] | mask) : (words_[i / 64] & ~mask);
    }
    void flip(size_t i) {
        words_[i / 64] ^= uint64_t{1} << (i % 64);
    }
    bool is_zero() const;
    size_t popcount() const;
    /// Parity of the entrywise product.
    bool dot(const BitVec &other) const;

    std::span<const uint64_t> words() const {
        return words_;
    }
    std::string to_string() const;

    BitVec &operator^=(const BitVec &other);
    friend BitVec operator^(BitVec a, const BitVec &b) {
        a ^= b;
        return a;
    }
    friend bool operator==(const BitVec &a, const BitVec &b) = default;
    /// Lexicographic on entries, entry 0 most significant.
    friend std::strong_ordering operator<=>(const BitVec &a, const BitVec &b);

   private:
    size_t length_ = 0;
    std::vector<uint64_t> words_;
};

/// A dense rows x cols matrix over F2. Each row is a run of machine words, so row
/// operations are word-wide XORs.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);
    BitMatrix(std::initializer_list<std::initializer_list<int>> rows);

    static BitMatrix identity(size_t n);
    static BitMatrix zeros(size_t rows, size_t cols) {
        return BitMatrix(rows, cols);
    }
    static BitMatrix from_rows(const std::vector<std::vector<int>> &rows);
    /// Text fixture format: one row per line, characters '0'/'1', no separators.
    static BitMatrix from_text(std::string_view text);
    /// Matrix whose column c is cols[c].
    static BitMatrix from_columns(const std::vector<BitVec> &cols);
    /// [top; bottom]
    static BitMatrix vstack(const BitMatrix &top, const BitMatrix &bottom);
    /// [left, right]
    static BitMatrix hstack(const BitMatrix &left, const BitMatrix &right);
    /// [[a, b], [c, d]] from four equally sized square blocks.
    static BitMatrix blocks(const BitMatrix &a, const BitMatrix &b, const BitMatrix &c, const BitMatrix &d);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }

    bool get(size_t r, size_t c) const {
        return (data_[r * stride_ + c / 64] >> (c % 64)) & 1;
    }
    void set(size_t r, size_t c, bool value) {
        uint64_t &w = data_[r * stride_ + c / 64];
        uint64_t mask = uint64_t{1} << (c % 64);
        w = value ? (w | mask) : (w & ~mask);
    }
    void flip(size_t r, size_t c) {
        data_[r * stride_ + c / 64] ^= uint64_t{1} << (c % 64);
    }

    std::span<uint64_t> row_words(size_t r) {
        return {data_.data() + r * stride_, stride_};
    }
    std::span<const uint64_t> row_words(size_t r) const {
        return {data_.data() + r * stride_, stride_};
    }
    /// row[dst] ^= row[src]
    void xor_row(size_t src, size_t dst);
    void swap_rows(size_t a, size_t b);
    /// col[dst] ^= col[src]
    void xor_col(size_t src, size_t dst);
    void swap_cols(size_t a, size_t b);
    bool row_is_zero(size_t r) const;

    BitVec row(size_t r) const;
    BitVec col(size_t c) const;
    BitMatrix block(size_t r0, size_t c0, size_t nrows, size_t ncols) const;
    BitMatrix transposed() const;
    /// Row-major flattening into a vector of length rows * cols.
    BitVec flatten() const;

    bool is_zero() const;
    bool is_identity() const;
    bool is_diagonal() const;
    bool is_symmetric() const;

    std::string to_text() const;
    std::vector<std::vector<int>> to_rows() const;

    BitMatrix &operator+=(const BitMatrix &other);
    friend BitMatrix operator+(BitMatrix a, const BitMatrix &b) {
        a += b;
        return a;
    }
    friend BitMatrix operator*(const BitMatrix &a, const BitMatrix &b);
    friend BitVec operator*(const BitMatrix &a, const BitVec &v);
    friend bool operator==(const BitMatrix &a, const BitMatrix &b) = default;
    /// Lexicographic on the row-major entry string, entry (0, 0) most significant.
    friend std::strong_ordering operator<=>(const BitMatrix &a, const BitMatrix &b);

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t stride_ = 0;
    std::vector<uint64_t> data_;
};

/// Throws std::invalid_argument when lhs.cols() != rhs.rows().
BitMatrix mat_mul(const BitMatrix &lhs, const BitMatrix &rhs);
BitMatrix mat_pow(const BitMatrix &a, uint64_t exponent);
/// Gauss-Jordan with lowest-index pivot rows; nullopt when singular.
std::optional<BitMatrix> mat_inverse(const BitMatrix &a);
BitMatrix transpose(const BitMatrix &a);
size_t rank(const BitMatrix &a);
bool is_symmetric(const BitMatrix &a);
bool is_invertible(const BitMatrix &a);
/// Reduced row echelon form.
BitMatrix rref(const BitMatrix &a);

struct AffineSolution {
    BitVec particular;
    std::vector<BitVec> nullspace_basis;
};

/// Full solution set of coeff * x = rhs: particular (free variables zero) plus one
/// nullspace vector per free column, in column order. nullopt when rhs is outside the
/// column space.
std::optional<AffineSolution> solve_affine(const BitMatrix &coeff, const BitVec &rhs);

/// det(xI + a) by fraction-free elimination over F2[x]. Supports size <= 31.
Poly2 char_poly(const BitMatrix &a);

/// p(a) by Horner's rule.
BitMatrix poly_eval(const Poly2 &p, const BitMatrix &a);

/// Connected components of the graph on {0..n-1} with an edge i-k (i != k) whenever
/// a(i,k) or a(k,i) is set. Components are sorted, and ordered by smallest member.
std::vector<std::vector<size_t>> offdiag_components(const BitMatrix &a);

}  // namespace mubforge

#endif
