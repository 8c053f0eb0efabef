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

#include "mubforge/construct.h"

#include <algorithm>
#include <bit>
#include <set>

namespace mubforge {

namespace {

BitMatrix zero_block(size_t m) {
    return BitMatrix(m, m);
}

BitMatrix g0(size_t m) {
    return BitMatrix::vstack(BitMatrix::identity(m), zero_block(m));
}

// Columns vec(X_k) of a list of equally sized matrices.
BitMatrix span_matrix(const std::vector<BitMatrix> &mats) {
    std::vector<BitVec> cols;
    cols.reserve(mats.size());
    for (const auto &x : mats) {
        cols.push_back(x.flatten());
    }
    return BitMatrix::from_columns(cols);
}

std::vector<BitMatrix> powers_times(const BitMatrix &b, const BitMatrix &r) {
    std::vector<BitMatrix> out;
    BitMatrix p = r;
    for (size_t k = 0; k < b.rows(); k++) {
        out.push_back(p);
        p = b * p;
    }
    return out;
}

uint64_t label_bits(const BitVec &v) {
    return v.words().empty() ? 0 : v.words()[0];
}

}  // namespace

std::string_view kind_name(SetKind kind) {
    switch (kind) {
        case SetKind::Field:
            return "field";
        case SetKind::Group:
            return "group";
        case SetKind::Semigroup:
            return "semigroup";
    }
    return "?";
}

SetKind parse_kind(std::string_view name) {
    if (name == "field") {
        return SetKind::Field;
    }
    if (name == "group") {
        return SetKind::Group;
    }
    if (name == "semigroup") {
        return SetKind::Semigroup;
    }
    throw std::invalid_argument("unknown set kind '" + std::string(name) + "'");
}

StabilizerSpec StabilizerSpec::field(const BitMatrix &b) {
    return {SetKind::Field, static_cast<int>(b.rows()), b, BitMatrix::identity(b.rows()), zero_block(b.rows())};
}

StabilizerSpec StabilizerSpec::group(const BitMatrix &b, const BitMatrix &r) {
    return {SetKind::Group, static_cast<int>(b.rows()), b, r, zero_block(b.rows())};
}

StabilizerSpec StabilizerSpec::semigroup(const BitMatrix &b, const BitMatrix &r, const BitMatrix &a) {
    return {SetKind::Semigroup, static_cast<int>(b.rows()), b, r, a};
}

std::optional<uint64_t> char_poly_index(const BitMatrix &b) {
    Poly2 p = char_poly(b);
    if (!is_irreducible(p)) {
        return std::nullopt;
    }
    return fibonacci_index(p);
}

std::vector<std::string> spec_violations(const StabilizerSpec &spec) {
    std::vector<std::string> out;
    if (spec.m < 1 || spec.m > kMaxQubits) {
        out.push_back("m = " + std::to_string(spec.m) + " outside 1.." + std::to_string(kMaxQubits));
        return out;
    }
    size_t m = spec.m;
    auto square_m = [m](const BitMatrix &x) { return x.rows() == m && x.cols() == m; };
    if (!square_m(spec.b) || !square_m(spec.r) || !square_m(spec.a)) {
        out.push_back("B, R and A must all be " + std::to_string(m) + "x" + std::to_string(m));
        return out;
    }
    if (spec.kind == SetKind::Field) {
        if (!spec.b.is_symmetric()) {
            out.push_back("B is not symmetric (required for field sets)");
        }
        if (!spec.r.is_identity()) {
            out.push_back("R must be the identity for field sets");
        }
    }
    if (spec.kind != SetKind::Semigroup && !spec.a.is_zero()) {
        out.push_back("A must be zero for " + std::string(kind_name(spec.kind)) + " sets");
    }
    if (!is_invertible(spec.b)) {
        out.push_back("B is not invertible");
    }
    if (!spec.r.is_symmetric()) {
        out.push_back("R is not symmetric");
    }
    if (!is_invertible(spec.r)) {
        out.push_back("R is not invertible");
    }
    if (!(spec.b * spec.r).is_symmetric()) {
        out.push_back("BR is not symmetric");
    }
    if (!spec.a.is_symmetric()) {
        out.push_back("A is not symmetric");
    }
    Poly2 p = char_poly(spec.b);
    if (!is_irreducible(p)) {
        out.push_back("characteristic polynomial " + p.to_string() + " of B is reducible");
    } else {
        uint64_t index = fibonacci_index(p);
        uint64_t want = spec.dimension() + 1;
        if (index != want) {
            out.push_back("fibonacci index of characteristic polynomial " + p.to_string() + " is " +
                          std::to_string(index) + ", expected d+1 = " + std::to_string(want));
        }
    }
    return out;
}

void check_spec(const StabilizerSpec &spec) {
    auto v = spec_violations(spec);
    if (!v.empty()) {
        throw SpecError(v.front());
    }
}

BitMatrix symplectic_form(size_t m) {
    return BitMatrix::blocks(zero_block(m), BitMatrix::identity(m), BitMatrix::identity(m), zero_block(m));
}

bool preserves_symplectic_form(const BitMatrix &x) {
    if (!x.is_square() || x.rows() % 2 != 0) {
        return false;
    }
    BitMatrix j = symplectic_form(x.rows() / 2);
    return x.transposed() * j * x == j;
}

BitMatrix build_stabilizer(const StabilizerSpec &spec) {
    check_spec(spec);
    const BitMatrix &b = spec.b;
    const BitMatrix &r = spec.r;
    const BitMatrix &a = spec.a;
    BitMatrix r_inv = *mat_inverse(r);
    BitMatrix a_r_inv = a * r_inv;
    return BitMatrix::blocks(b + a_r_inv, r + b * a + a_r_inv * a, r_inv, r_inv * a);
}

BitMatrix stabilizer_power(const BitMatrix &c, uint64_t j) {
    return mat_pow(c, j);
}

bool cyclicity_check(const BitMatrix &c, uint64_t d) {
    if (!c.is_square()) {
        return false;
    }
    BitMatrix p = BitMatrix::identity(c.rows());
    for (uint64_t j = 1; j <= d; j++) {
        p = p * c;
        if (p.is_identity()) {
            return false;
        }
    }
    return (p * c).is_identity();
}

StandardForm standard_form(const BitMatrix &generator) {
    if (generator.rows() != 2 * generator.cols()) {
        throw SpecError("generator must be 2m x m");
    }
    size_t m = generator.cols();
    BitMatrix upper = generator.block(0, 0, m, m);
    BitMatrix lower = generator.block(m, 0, m, m);
    if (auto lower_inv = mat_inverse(lower)) {
        return StandardForm::Matrix(upper * *lower_inv);
    }
    if (lower.is_zero() && is_invertible(upper)) {
        return StandardForm::ZBasis();
    }
    throw SpecError("standard form undefined: lower block has rank " + std::to_string(rank(lower)) + " of " +
                    std::to_string(m));
}

GeneratorSet generators(const StabilizerSpec &spec) {
    BitMatrix c = build_stabilizer(spec);
    size_t m = spec.m;
    uint64_t d = spec.dimension();
    GeneratorSet out;
    out.m = spec.m;
    out.generators.reserve(d + 1);
    out.standard_forms.reserve(d + 1);
    BitMatrix g = g0(m);
    out.generators.push_back(g);
    out.standard_forms.push_back(StandardForm::ZBasis());
    for (uint64_t j = 1; j <= d; j++) {
        g = c * g;
        auto lower_inv = mat_inverse(g.block(m, 0, m, m));
        if (!lower_inv) {
            throw SpecError("lower block of G_" + std::to_string(j) + " is singular");
        }
        out.standard_forms.push_back(StandardForm::Matrix(g.block(0, 0, m, m) * *lower_inv));
        out.generators.push_back(g);
    }
    return out;
}

namespace {

bool classes_commute(const GeneratorSet &gens) {
    BitMatrix j = symplectic_form(gens.m);
    for (size_t k = 0; k < gens.generators.size(); k++) {
        const auto &g = gens.generators[k];
        if (!(g.transposed() * j * g).is_zero()) {
            return false;
        }
        const auto &sf = gens.standard_forms[k];
        if (!sf.z_basis && !sf.m.is_symmetric()) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool class_partition_ok_enumerated(const GeneratorSet &gens) {
    if (gens.m < 1 || gens.m > 10) {
        throw std::invalid_argument("class_partition_ok_enumerated supports 1 <= m <= 10");
    }
    size_t m = gens.m;
    uint64_t d = uint64_t{1} << m;
    if (gens.generators.size() != d + 1 || !classes_commute(gens)) {
        return false;
    }
    std::vector<bool> seen(uint64_t{1} << (2 * m), false);
    uint64_t covered = 0;
    for (const auto &g : gens.generators) {
        std::vector<uint64_t> cols;
        for (size_t c = 0; c < m; c++) {
            cols.push_back(label_bits(g.col(c)));
        }
        // Walk the nonzero combinations in Gray-code order.
        uint64_t label = 0;
        for (uint64_t i = 1; i < d; i++) {
            label ^= cols[std::countr_zero(i)];
            if (label == 0 || seen[label]) {
                return false;
            }
            seen[label] = true;
            covered++;
        }
    }
    return covered == d * d - 1;
}

bool class_partition_ok(const GeneratorSet &gens) {
    size_t m = gens.m;
    if (m < 1) {
        return false;
    }
    if (m <= 10) {
        return class_partition_ok_enumerated(gens);
    }
    uint64_t d = uint64_t{1} << m;
    if (gens.generators.size() != d + 1 || !classes_commute(gens)) {
        return false;
    }
    std::vector<BitMatrix> forms;
    size_t z_count = 0;
    for (const auto &sf : gens.standard_forms) {
        if (sf.z_basis) {
            z_count++;
        } else {
            forms.push_back(sf.m);
        }
    }
    if (z_count != 1 || forms.size() != d) {
        return false;
    }
    // Classes (M_j; I) and (M_k; I) meet only when M_j + M_k is singular. When the forms
    // are a coset of an m-dimensional space the differences are the space itself, so a
    // linear number of inverses settles it.
    std::vector<BitMatrix> diffs;
    for (const auto &f : forms) {
        diffs.push_back(f + forms.front());
    }
    std::vector<BitMatrix> sorted = diffs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return false;
    }
    if (rank(span_matrix(diffs)) == m) {
        for (const auto &x : diffs) {
            if (!x.is_zero() && !is_invertible(x)) {
                return false;
            }
        }
        return true;
    }
    for (size_t i = 0; i < forms.size(); i++) {
        for (size_t k = i + 1; k < forms.size(); k++) {
            if (!is_invertible(forms[i] + forms[k])) {
                return false;
            }
        }
    }
    return true;
}

bool field_closure_check(const GeneratorSet &gens) {
    if (gens.m < 1 || gens.m > 10) {
        throw std::invalid_argument("field_closure_check supports 1 <= m <= 10");
    }
    size_t m = gens.m;
    std::set<BitMatrix> elems;
    for (const auto &sf : gens.standard_forms) {
        if (!sf.z_basis) {
            elems.insert(sf.m);
        }
    }
    if (elems.size() != (size_t{1} << m)) {
        return false;
    }
    if (!elems.contains(BitMatrix(m, m)) || !elems.contains(BitMatrix::identity(m))) {
        return false;
    }
    for (const auto &x : elems) {
        for (const auto &y : elems) {
            if (!elems.contains(x + y) || !elems.contains(x * y)) {
                return false;
            }
        }
    }
    return true;
}

std::vector<BitMatrix> symmetrizer_space(const BitMatrix &b) {
    if (!b.is_square()) {
        throw std::invalid_argument("symmetrizer_space needs a square matrix");
    }
    size_t m = b.rows();
    // Unknowns: the upper triangle of R, row-major.
    std::vector<std::vector<size_t>> idx(m, std::vector<size_t>(m));
    size_t n = 0;
    for (size_t i = 0; i < m; i++) {
        for (size_t k = i; k < m; k++) {
            idx[i][k] = idx[k][i] = n++;
        }
    }
    // (BR)(i,k) + (BR)(k,i) = sum_l B(i,l) R(l,k) + B(k,l) R(l,i) = 0 for i < k.
    BitMatrix coeff(m * (m - 1) / 2, n);
    size_t eq = 0;
    for (size_t i = 0; i < m; i++) {
        for (size_t k = i + 1; k < m; k++, eq++) {
            for (size_t l = 0; l < m; l++) {
                if (b.get(i, l)) {
                    coeff.flip(eq, idx[l][k]);
                }
                if (b.get(k, l)) {
                    coeff.flip(eq, idx[l][i]);
                }
            }
        }
    }
    auto sol = solve_affine(coeff, BitVec(coeff.rows()));
    std::vector<BitMatrix> basis;
    for (const auto &v : sol->nullspace_basis) {
        BitMatrix r(m, m);
        for (size_t i = 0; i < m; i++) {
            for (size_t k = 0; k < m; k++) {
                r.set(i, k, v.get(idx[i][k]));
            }
        }
        basis.push_back(std::move(r));
    }
    return basis;
}

bool is_polynomial_in(const BitMatrix &b, const BitMatrix &x) {
    if (!b.is_square() || x.rows() != b.rows() || x.cols() != b.cols()) {
        throw std::invalid_argument("is_polynomial_in needs equally sized square matrices");
    }
    return solve_affine(span_matrix(powers_times(b, BitMatrix::identity(b.rows()))), x.flatten()).has_value();
}

std::optional<BitMatrix> find_symmetrizer(const BitMatrix &b, bool require_nonpoly) {
    auto basis = symmetrizer_space(b);
    if (basis.size() > 20) {
        throw std::invalid_argument("symmetrizer space of dimension " + std::to_string(basis.size()) +
                                    " is too large to enumerate");
    }
    size_t m = b.rows();
    std::optional<BitMatrix> best;
    bool best_involution = false;
    BitMatrix r(m, m);
    // Gray-code walk over the nonzero elements of the space.
    for (uint64_t i = 1; i < (uint64_t{1} << basis.size()); i++) {
        r += basis[std::countr_zero(i)];
        if (!is_invertible(r)) {
            continue;
        }
        bool involution = (r * r).is_identity();
        if (best && (best_involution && !involution)) {
            continue;
        }
        if (best && involution == best_involution && !(r < *best)) {
            continue;
        }
        if (require_nonpoly && is_polynomial_in(b, r)) {
            continue;
        }
        best = r;
        best_involution = involution;
    }
    return best;
}

bool span_excluded(const BitMatrix &b, const BitMatrix &r, const BitMatrix &a) {
    size_t m = b.rows();
    auto cols = powers_times(b, r);
    for (size_t i = 0; i < m; i++) {
        BitMatrix e(m, m);
        e.set(i, i, true);
        cols.push_back(std::move(e));
    }
    return solve_affine(span_matrix(cols), a.flatten()).has_value();
}

std::optional<BitMatrix> find_A(const BitMatrix &b, const BitMatrix &r) {
    size_t m = b.rows();
    size_t n = m * (m + 1) / 2;
    uint64_t limit = n >= 64 ? UINT64_MAX : (uint64_t{1} << n);
    auto cols = powers_times(b, r);
    for (size_t i = 0; i < m; i++) {
        BitMatrix e(m, m);
        e.set(i, i, true);
        cols.push_back(std::move(e));
    }
    BitMatrix span = span_matrix(cols);
    for (uint64_t bits = 0; bits < limit; bits++) {
        BitMatrix a = symmetric_from_bits(m, bits);
        if (!solve_affine(span, a.flatten())) {
            return a;
        }
    }
    return std::nullopt;
}

BitMatrix symmetric_from_bits(size_t m, uint64_t bits) {
    size_t n = m * (m + 1) / 2;
    BitMatrix s(m, m);
    size_t t = 0;
    for (size_t i = 0; i < m; i++) {
        for (size_t k = i; k < m; k++, t++) {
            size_t pos = n - 1 - t;
            if (pos < 64 && ((bits >> pos) & 1)) {
                s.set(i, k, true);
                s.set(k, i, true);
            }
        }
    }
    return s;
}

BitMatrix matrix_from_bits(size_t m, uint64_t bits) {
    size_t n = m * m;
    BitMatrix s(m, m);
    for (size_t t = 0; t < n; t++) {
        size_t pos = n - 1 - t;
        if (pos < 64 && ((bits >> pos) & 1)) {
            s.set(t / m, t % m, true);
        }
    }
    return s;
}

}  // namespace mubforge
