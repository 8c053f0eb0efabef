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

#include "mubforge/bit_matrix.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace mubforge {

namespace {

size_t words_for(size_t bits) {
    return (bits + 63) / 64;
}

// Carry-less product; the caller guarantees deg(a) + deg(b) < 64.
uint64_t clmul(uint64_t a, uint64_t b) {
    uint64_t r = 0;
    while (a != 0) {
        int k = std::countr_zero(a);
        a &= a - 1;
        r ^= b << k;
    }
    return r;
}

int deg64(uint64_t a) {
    return a == 0 ? -1 : 63 - std::countl_zero(a);
}

// Exact quotient of a by b in F2[x].
uint64_t cldiv(uint64_t a, uint64_t b) {
    int db = deg64(b);
    uint64_t q = 0;
    for (int e = deg64(a); e >= db; e = deg64(a)) {
        q |= uint64_t{1} << (e - db);
        a ^= b << (e - db);
    }
    return q;
}

// Row reduction to reduced echelon form over the first `pivot_cols` columns.
// Returns pivot column per pivot row, in row order.
std::vector<size_t> reduce(BitMatrix &m, size_t pivot_cols) {
    std::vector<size_t> pivots;
    size_t next_row = 0;
    for (size_t c = 0; c < pivot_cols && next_row < m.rows(); c++) {
        size_t pivot = next_row;
        while (pivot < m.rows() && !m.get(pivot, c)) {
            pivot++;
        }
        if (pivot == m.rows()) {
            continue;
        }
        m.swap_rows(pivot, next_row);
        for (size_t r = 0; r < m.rows(); r++) {
            if (r != next_row && m.get(r, c)) {
                m.xor_row(next_row, r);
            }
        }
        pivots.push_back(c);
        next_row++;
    }
    return pivots;
}

}  // namespace

BitVec::BitVec(size_t length) : length_(length), words_(words_for(length), 0) {
}

BitVec::BitVec(std::initializer_list<int> bits) : BitVec(bits.size()) {
    size_t i = 0;
    for (int b : bits) {
        set(i++, b != 0);
    }
}

BitVec BitVec::from_string(std::string_view text) {
    BitVec v(text.size());
    for (size_t i = 0; i < text.size(); i++) {
        if (text[i] != '0' && text[i] != '1') {
            throw std::invalid_argument("bit vector text must be '0'/'1'");
        }
        v.set(i, text[i] == '1');
    }
    return v;
}

bool BitVec::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

size_t BitVec::popcount() const {
    size_t n = 0;
    for (uint64_t w : words_) {
        n += std::popcount(w);
    }
    return n;
}

bool BitVec::dot(const BitVec &other) const {
    if (other.length_ != length_) {
        throw std::invalid_argument("BitVec::dot length mismatch");
    }
    uint64_t acc = 0;
    for (size_t i = 0; i < words_.size(); i++) {
        acc ^= words_[i] & other.words_[i];
    }
    return std::popcount(acc) & 1;
}

std::string BitVec::to_string() const {
    std::string s(length_, '0');
    for (size_t i = 0; i < length_; i++) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

BitVec &BitVec::operator^=(const BitVec &other) {
    if (other.length_ != length_) {
        throw std::invalid_argument("BitVec xor length mismatch");
    }
    for (size_t i = 0; i < words_.size(); i++) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

std::strong_ordering operator<=>(const BitVec &a, const BitVec &b) {
    size_t n = std::min(a.length_, b.length_);
    for (size_t i = 0; i < n; i++) {
        if (a.get(i) != b.get(i)) {
            return a.get(i) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return a.length_ <=> b.length_;
}

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * words_for(cols), 0) {
}

BitMatrix::BitMatrix(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<int>> v;
    for (const auto &r : rows) {
        v.emplace_back(r);
    }
    *this = from_rows(v);
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>> &rows) {
    size_t ncols = rows.empty() ? 0 : rows[0].size();
    BitMatrix m(rows.size(), ncols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != ncols) {
            throw std::invalid_argument("ragged rows in matrix literal");
        }
        for (size_t c = 0; c < ncols; c++) {
            int v = rows[r][c];
            if (v != 0 && v != 1) {
                throw std::invalid_argument("matrix entries must be 0 or 1");
            }
            m.set(r, c, v == 1);
        }
    }
    return m;
}

BitMatrix BitMatrix::from_text(std::string_view text) {
    std::vector<std::vector<int>> rows;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (!line.empty()) {
            std::vector<int> row;
            for (char ch : line) {
                if (ch != '0' && ch != '1') {
                    throw std::invalid_argument("matrix text must contain only '0'/'1' per line");
                }
                row.push_back(ch - '0');
            }
            rows.push_back(std::move(row));
        }
        start = end + 1;
    }
    return from_rows(rows);
}

BitMatrix BitMatrix::from_columns(const std::vector<BitVec> &cols) {
    if (cols.empty()) {
        return {};
    }
    BitMatrix m(cols[0].size(), cols.size());
    for (size_t c = 0; c < cols.size(); c++) {
        if (cols[c].size() != m.rows()) {
            throw std::invalid_argument("column length mismatch");
        }
        for (size_t r = 0; r < m.rows(); r++) {
            if (cols[c].get(r)) {
                m.set(r, c, true);
            }
        }
    }
    return m;
}

BitMatrix BitMatrix::vstack(const BitMatrix &top, const BitMatrix &bottom) {
    if (top.cols_ != bottom.cols_) {
        throw std::invalid_argument("vstack column mismatch");
    }
    BitMatrix m(top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.data_.begin(), top.data_.end(), m.data_.begin());
    std::copy(bottom.data_.begin(), bottom.data_.end(), m.data_.begin() + top.data_.size());
    return m;
}

BitMatrix BitMatrix::hstack(const BitMatrix &left, const BitMatrix &right) {
    if (left.rows_ != right.rows_) {
        throw std::invalid_argument("hstack row mismatch");
    }
    BitMatrix m(left.rows_, left.cols_ + right.cols_);
    for (size_t r = 0; r < m.rows_; r++) {
        for (size_t c = 0; c < left.cols_; c++) {
            if (left.get(r, c)) {
                m.set(r, c, true);
            }
        }
        for (size_t c = 0; c < right.cols_; c++) {
            if (right.get(r, c)) {
                m.set(r, left.cols_ + c, true);
            }
        }
    }
    return m;
}

BitMatrix BitMatrix::blocks(const BitMatrix &a, const BitMatrix &b, const BitMatrix &c, const BitMatrix &d) {
    return vstack(hstack(a, b), hstack(c, d));
}

void BitMatrix::xor_row(size_t src, size_t dst) {
    uint64_t *d = data_.data() + dst * stride_;
    const uint64_t *s = data_.data() + src * stride_;
    for (size_t k = 0; k < stride_; k++) {
        d[k] ^= s[k];
    }
}

void BitMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(data_.begin() + a * stride_, data_.begin() + (a + 1) * stride_, data_.begin() + b * stride_);
}

void BitMatrix::xor_col(size_t src, size_t dst) {
    for (size_t r = 0; r < rows_; r++) {
        if (get(r, src)) {
            flip(r, dst);
        }
    }
}

void BitMatrix::swap_cols(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    for (size_t r = 0; r < rows_; r++) {
        bool va = get(r, a);
        bool vb = get(r, b);
        if (va != vb) {
            flip(r, a);
            flip(r, b);
        }
    }
}

bool BitMatrix::row_is_zero(size_t r) const {
    auto w = row_words(r);
    return std::all_of(w.begin(), w.end(), [](uint64_t x) { return x == 0; });
}

BitVec BitMatrix::row(size_t r) const {
    BitVec v(cols_);
    for (size_t c = 0; c < cols_; c++) {
        if (get(r, c)) {
            v.set(c, true);
        }
    }
    return v;
}

BitVec BitMatrix::col(size_t c) const {
    BitVec v(rows_);
    for (size_t r = 0; r < rows_; r++) {
        if (get(r, c)) {
            v.set(r, true);
        }
    }
    return v;
}

BitMatrix BitMatrix::block(size_t r0, size_t c0, size_t nrows, size_t ncols) const {
    if (r0 + nrows > rows_ || c0 + ncols > cols_) {
        throw std::out_of_range("block outside matrix");
    }
    BitMatrix m(nrows, ncols);
    for (size_t r = 0; r < nrows; r++) {
        for (size_t c = 0; c < ncols; c++) {
            if (get(r0 + r, c0 + c)) {
                m.set(r, c, true);
            }
        }
    }
    return m;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (get(r, c)) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

BitVec BitMatrix::flatten() const {
    BitVec v(rows_ * cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (get(r, c)) {
                v.set(r * cols_ + c, true);
            }
        }
    }
    return v;
}

bool BitMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](uint64_t w) { return w == 0; });
}

bool BitMatrix::is_identity() const {
    return is_square() && *this == identity(rows_);
}

bool BitMatrix::is_diagonal() const {
    if (!is_square()) {
        return false;
    }
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (r != c && get(r, c)) {
                return false;
            }
        }
    }
    return true;
}

bool BitMatrix::is_symmetric() const {
    if (!is_square()) {
        return false;
    }
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = r + 1; c < cols_; c++) {
            if (get(r, c) != get(c, r)) {
                return false;
            }
        }
    }
    return true;
}

std::string BitMatrix::to_text() const {
    std::string s;
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            s.push_back(get(r, c) ? '1' : '0');
        }
        s.push_back('\n');
    }
    return s;
}

std::vector<std::vector<int>> BitMatrix::to_rows() const {
    std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_, 0));
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out[r][c] = get(r, c) ? 1 : 0;
        }
    }
    return out;
}

BitMatrix &BitMatrix::operator+=(const BitMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix addition dimension mismatch");
    }
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] ^= other.data_[k];
    }
    return *this;
}

BitMatrix operator*(const BitMatrix &a, const BitMatrix &b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("mat_mul dimension mismatch: " + std::to_string(a.rows_) + "x" +
                                    std::to_string(a.cols_) + " times " + std::to_string(b.rows_) + "x" +
                                    std::to_string(b.cols_));
    }
    BitMatrix out(a.rows_, b.cols_);
    for (size_t r = 0; r < a.rows_; r++) {
        uint64_t *dst = out.data_.data() + r * out.stride_;
        for (size_t k = 0; k < a.cols_; k++) {
            if (a.get(r, k)) {
                const uint64_t *src = b.data_.data() + k * b.stride_;
                for (size_t w = 0; w < out.stride_; w++) {
                    dst[w] ^= src[w];
                }
            }
        }
    }
    return out;
}

BitVec operator*(const BitMatrix &a, const BitVec &v) {
    if (a.cols_ != v.size()) {
        throw std::invalid_argument("matrix-vector dimension mismatch");
    }
    BitVec out(a.rows_);
    auto vw = v.words();
    for (size_t r = 0; r < a.rows_; r++) {
        uint64_t acc = 0;
        auto rw = a.row_words(r);
        for (size_t w = 0; w < rw.size(); w++) {
            acc ^= rw[w] & vw[w];
        }
        if (std::popcount(acc) & 1) {
            out.set(r, true);
        }
    }
    return out;
}

std::strong_ordering operator<=>(const BitMatrix &a, const BitMatrix &b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) {
        return c;
    }
    if (auto c = a.cols_ <=> b.cols_; c != 0) {
        return c;
    }
    for (size_t r = 0; r < a.rows_; r++) {
        for (size_t w = 0; w < a.stride_; w++) {
            uint64_t x = a.data_[r * a.stride_ + w];
            uint64_t y = b.data_[r * b.stride_ + w];
            if (x != y) {
                // Lowest differing column decides; a set bit there is "greater".
                int k = std::countr_zero(x ^ y);
                return ((x >> k) & 1) ? std::strong_ordering::greater : std::strong_ordering::less;
            }
        }
    }
    return std::strong_ordering::equal;
}

BitMatrix mat_mul(const BitMatrix &lhs, const BitMatrix &rhs) {
    return lhs * rhs;
}

BitMatrix mat_pow(const BitMatrix &a, uint64_t exponent) {
    if (!a.is_square()) {
        throw std::invalid_argument("mat_pow needs a square matrix");
    }
    BitMatrix result = BitMatrix::identity(a.rows());
    BitMatrix base = a;
    while (exponent != 0) {
        if (exponent & 1) {
            result = result * base;
        }
        exponent >>= 1;
        if (exponent != 0) {
            base = base * base;
        }
    }
    return result;
}

std::optional<BitMatrix> mat_inverse(const BitMatrix &a) {
    if (!a.is_square()) {
        throw std::invalid_argument("mat_inverse needs a square matrix");
    }
    size_t n = a.rows();
    BitMatrix aug = BitMatrix::hstack(a, BitMatrix::identity(n));
    auto pivots = reduce(aug, n);
    if (pivots.size() < n) {
        return std::nullopt;
    }
    return aug.block(0, n, n, n);
}

BitMatrix transpose(const BitMatrix &a) {
    return a.transposed();
}

size_t rank(const BitMatrix &a) {
    BitMatrix m = a;
    return reduce(m, m.cols()).size();
}

bool is_symmetric(const BitMatrix &a) {
    return a.is_symmetric();
}

bool is_invertible(const BitMatrix &a) {
    return a.is_square() && rank(a) == a.rows();
}

BitMatrix rref(const BitMatrix &a) {
    BitMatrix m = a;
    reduce(m, m.cols());
    return m;
}

std::optional<AffineSolution> solve_affine(const BitMatrix &coeff, const BitVec &rhs) {
    if (coeff.rows() != rhs.size()) {
        throw std::invalid_argument("solve_affine: rhs length does not match coefficient rows");
    }
    size_t n = coeff.cols();
    BitMatrix aug(coeff.rows(), n + 1);
    for (size_t r = 0; r < coeff.rows(); r++) {
        auto src = coeff.row_words(r);
        auto dst = aug.row_words(r);
        std::copy(src.begin(), src.end(), dst.begin());
        if (rhs.get(r)) {
            aug.set(r, n, true);
        }
    }
    auto pivots = reduce(aug, n);
    for (size_t r = pivots.size(); r < aug.rows(); r++) {
        if (aug.get(r, n)) {
            return std::nullopt;
        }
    }
    AffineSolution sol{BitVec(n), {}};
    std::vector<bool> is_pivot(n, false);
    for (size_t i = 0; i < pivots.size(); i++) {
        is_pivot[pivots[i]] = true;
        if (aug.get(i, n)) {
            sol.particular.set(pivots[i], true);
        }
    }
    for (size_t f = 0; f < n; f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVec v(n);
        v.set(f, true);
        for (size_t i = 0; i < pivots.size(); i++) {
            if (aug.get(i, f)) {
                v.set(pivots[i], true);
            }
        }
        sol.nullspace_basis.push_back(std::move(v));
    }
    return sol;
}

Poly2 char_poly(const BitMatrix &a) {
    if (!a.is_square()) {
        throw std::invalid_argument("char_poly needs a square matrix");
    }
    size_t n = a.rows();
    if (n == 0) {
        return Poly2::from_bits(1);
    }
    if (n > 31) {
        throw std::invalid_argument("char_poly supports matrices up to 31x31");
    }
    // Entries of xI + a as packed polynomials. Bareiss keeps every intermediate entry a
    // minor of degree <= k + 1, so products stay below degree 2n < 64.
    std::vector<uint64_t> m(n * n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            uint64_t e = a.get(r, c) ? 1 : 0;
            if (r == c) {
                e ^= 2;
            }
            m[r * n + c] = e;
        }
    }
    uint64_t prev = 1;
    for (size_t k = 0; k + 1 < n; k++) {
        if (m[k * n + k] == 0) {
            size_t p = k + 1;
            while (p < n && m[p * n + k] == 0) {
                p++;
            }
            if (p == n) {
                return Poly2();
            }
            for (size_t c = 0; c < n; c++) {
                std::swap(m[k * n + c], m[p * n + c]);
            }
        }
        uint64_t pivot = m[k * n + k];
        for (size_t i = k + 1; i < n; i++) {
            for (size_t j = k + 1; j < n; j++) {
                uint64_t num = clmul(m[i * n + j], pivot) ^ clmul(m[i * n + k], m[k * n + j]);
                m[i * n + j] = cldiv(num, prev);
            }
            m[i * n + k] = 0;
        }
        prev = pivot;
    }
    return Poly2::from_bits(m[n * n - 1]);
}

BitMatrix poly_eval(const Poly2 &p, const BitMatrix &a) {
    if (!a.is_square()) {
        throw std::invalid_argument("poly_eval needs a square matrix");
    }
    size_t n = a.rows();
    BitMatrix result(n, n);
    for (int e = p.degree(); e >= 0; e--) {
        result = result * a;
        if (p.coeff(e)) {
            result += BitMatrix::identity(n);
        }
    }
    return result;
}

std::vector<std::vector<size_t>> offdiag_components(const BitMatrix &a) {
    if (!a.is_square()) {
        throw std::invalid_argument("offdiag_components needs a square matrix");
    }
    size_t n = a.rows();
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (size_t i = 0; i < n; i++) {
        for (size_t k = 0; k < n; k++) {
            if (i != k && a.get(i, k)) {
                size_t ri = find(i), rk = find(k);
                if (ri != rk) {
                    parent[std::max(ri, rk)] = std::min(ri, rk);
                }
            }
        }
    }
    std::vector<std::vector<size_t>> comps;
    std::vector<size_t> slot(n, SIZE_MAX);
    for (size_t i = 0; i < n; i++) {
        size_t root = find(i);
        if (slot[root] == SIZE_MAX) {
            slot[root] = comps.size();
            comps.emplace_back();
        }
        comps[slot[root]].push_back(i);
    }
    return comps;
}

}  // namespace mubforge
