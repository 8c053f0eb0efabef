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

#include "mubforge/equiv.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mubforge {

namespace {

constexpr int kMaxIntertwinerBits = 20;

// Congruence state: s_ = p_ * R * p_ᵗ throughout.
class Congruence {
   public:
    explicit Congruence(const BitMatrix &r) : s_(r), p_(BitMatrix::identity(r.rows())) {
    }

    void add(size_t src, size_t dst) {
        s_.xor_row(src, dst);
        s_.xor_col(src, dst);
        p_.xor_row(src, dst);
    }
    void swap(size_t a, size_t b) {
        s_.swap_rows(a, b);
        s_.swap_cols(a, b);
        p_.swap_rows(a, b);
    }
    void apply(const BitMatrix &e) {
        s_ = e * s_ * e.transposed();
        p_ = e * p_;
    }
    const BitMatrix &form() const {
        return s_;
    }
    const BitMatrix &basis() const {
        return p_;
    }

   private:
    BitMatrix s_;
    BitMatrix p_;
};

BitMatrix column_space_key(const BitMatrix &g) {
    return rref(g.transposed());
}

BitMatrix zeros_like(const BitMatrix &a, size_t m) {
    return a.rows() == 0 ? BitMatrix(m, m) : a;
}

}  // namespace

SymplecticMap SymplecticMap::identity(size_t m) {
    return {BitMatrix::identity(m), BitMatrix(m, m), BitMatrix(m, m), BitMatrix::identity(m)};
}

SymplecticMap SymplecticMap::from_full(const BitMatrix &f) {
    if (!f.is_square() || f.rows() % 2 != 0) {
        throw std::invalid_argument("symplectic map must be 2m x 2m");
    }
    size_t m = f.rows() / 2;
    return {f.block(0, 0, m, m), f.block(0, m, m, m), f.block(m, 0, m, m), f.block(m, m, m, m)};
}

BitMatrix SymplecticMap::full() const {
    return BitMatrix::blocks(s, t, u, v);
}

bool is_symplectic(const SymplecticMap &f) {
    size_t m = f.s.rows();
    for (const BitMatrix *b : {&f.s, &f.t, &f.u, &f.v}) {
        if (b->rows() != m || b->cols() != m) {
            return false;
        }
    }
    if (m == 0) {
        return false;
    }
    return preserves_symplectic_form(f.full());
}

SymplecticMap compose(const SymplecticMap &a, const SymplecticMap &b) {
    return SymplecticMap::from_full(b.full() * a.full());
}

SymplecticMap symplectic_inverse(const SymplecticMap &f) {
    BitMatrix j = symplectic_form(f.m());
    return SymplecticMap::from_full(j * f.full().transposed() * j);
}

std::optional<BitMatrix> gram_factor(const BitMatrix &r) {
    if (!r.is_square() || !r.is_symmetric() || !is_invertible(r)) {
        throw std::invalid_argument("gram_factor needs a symmetric invertible matrix");
    }
    size_t m = r.rows();
    Congruence c(r);
    size_t k = 0;
    size_t guard = 4 * m * m + 4;
    while (k < m) {
        if (guard-- == 0) {
            throw std::logic_error("gram_factor did not converge");
        }
        const BitMatrix &s = c.form();
        size_t pivot = k;
        while (pivot < m && !s.get(pivot, pivot)) {
            pivot++;
        }
        if (pivot < m) {
            c.swap(pivot, k);
            for (size_t j = 0; j < m; j++) {
                if (j != k && c.form().get(j, k)) {
                    c.add(k, j);
                }
            }
            k++;
            continue;
        }
        if (k == 0) {
            return std::nullopt;
        }
        // Remaining block is alternating. With e the last pivot and (u, w) a hyperbolic
        // pair, {e+u, e+w, e+u+w} is an orthonormal basis of span{e, u, w}.
        size_t u = m, w = m;
        for (size_t i = k; i < m && u == m; i++) {
            for (size_t j = k; j < m; j++) {
                if (s.get(i, j)) {
                    u = i;
                    w = j;
                    break;
                }
            }
        }
        if (u == m) {
            throw std::logic_error("gram_factor: singular remainder");
        }
        size_t e = k - 1;
        BitMatrix ex = BitMatrix::identity(m);
        ex.set(e, u, true);
        ex.set(u, e, true);
        ex.set(u, u, false);
        ex.set(u, w, true);
        ex.set(w, e, true);
        ex.set(w, u, true);
        c.apply(ex);
        k = e;
    }
    auto p_inv = mat_inverse(c.basis());
    BitMatrix g = p_inv->transposed();
    if (!(g.transposed() * g == r)) {
        throw std::logic_error("gram_factor produced a wrong factor");
    }
    return g;
}

GeneratorSet transport(const SymplecticMap &f, const GeneratorSet &gens) {
    if (!is_symplectic(f) || f.m() != static_cast<size_t>(gens.m)) {
        throw std::invalid_argument("transport needs a symplectic map of matching size");
    }
    BitMatrix full = f.full();
    GeneratorSet out;
    out.m = gens.m;
    for (size_t j = 0; j < gens.generators.size(); j++) {
        BitMatrix g = full * gens.generators[j];
        try {
            out.standard_forms.push_back(standard_form(g));
        } catch (const SpecError &e) {
            throw SpecError("transported class " + std::to_string(j) + ": " + e.what());
        }
        out.generators.push_back(std::move(g));
    }
    return out;
}

bool classes_equal(const GeneratorSet &a, const GeneratorSet &b) {
    if (a.m != b.m || a.generators.size() != b.generators.size()) {
        return false;
    }
    auto keys = [](const GeneratorSet &s) {
        std::vector<BitMatrix> k;
        k.reserve(s.generators.size());
        for (const auto &g : s.generators) {
            k.push_back(column_space_key(g));
        }
        std::sort(k.begin(), k.end());
        return k;
    };
    return keys(a) == keys(b);
}

std::optional<AnchorMap> anchor_map(const StabilizerSpec &spec) {
    size_t m = spec.m;
    if (spec.kind == SetKind::Field) {
        return AnchorMap{SymplecticMap::identity(m), spec.b};
    }
    auto g = gram_factor(spec.r);
    if (!g) {
        return std::nullopt;
    }
    BitMatrix s = g->transposed();
    BitMatrix s_inv = *mat_inverse(s);
    BitMatrix v = s_inv.transposed();
    BitMatrix t = zeros_like(spec.a, m) * v;
    return AnchorMap{{s, t, BitMatrix(m, m), v}, s_inv * spec.b * s};
}

std::optional<BitMatrix> find_intertwiner(const BitMatrix &from, const BitMatrix &to,
                                          const std::function<bool(const BitMatrix &)> &accept) {
    if (!from.is_square() || !to.is_square() || from.rows() != to.rows()) {
        throw std::invalid_argument("find_intertwiner needs square matrices of equal size");
    }
    size_t m = from.rows();
    size_t n = m * m;
    BitMatrix coeff(n, n);
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < m; j++) {
            size_t eq = i * m + j;
            for (size_t k = 0; k < m; k++) {
                if (from.get(k, j)) {
                    coeff.flip(eq, i * m + k);
                }
                if (to.get(i, k)) {
                    coeff.flip(eq, k * m + j);
                }
            }
        }
    }
    auto sol = solve_affine(coeff, BitVec(n));
    const auto &basis = sol->nullspace_basis;
    size_t bits = std::min<size_t>(basis.size(), kMaxIntertwinerBits);
    BitVec cur(n);
    auto as_matrix = [&](const BitVec &x) {
        BitMatrix out(m, m);
        for (size_t t = 0; t < n; t++) {
            if (x.get(t)) {
                out.set(t / m, t % m, true);
            }
        }
        return out;
    };
    for (uint64_t i = 1; i < (uint64_t{1} << bits); i++) {
        cur ^= basis[std::countr_zero(i)];
        BitMatrix x = as_matrix(cur);
        if (accept(x)) {
            return x;
        }
    }
    return std::nullopt;
}

EquivVerdict equivalence(const StabilizerSpec &a, const StabilizerSpec &b) {
    if (a.m != b.m) {
        throw std::invalid_argument("specs differ in m (" + std::to_string(a.m) + " vs " + std::to_string(b.m) + ")");
    }
    size_t m = a.m;
    GeneratorSet ga = generators(a);
    GeneratorSet gb = generators(b);
    EquivVerdict verdict;
    if (classes_equal(ga, gb)) {
        verdict.status = EquivStatus::Equivalent;
        verdict.map = SymplecticMap::identity(m);
        verdict.detail = "identical class sets, f = I";
        return verdict;
    }
    auto la = anchor_map(a);
    auto lb = anchor_map(b);
    if (!la || !lb) {
        verdict.status = EquivStatus::NotExpressible;
        verdict.detail = std::string("R of spec ") + (!la ? "a" : "b") +
                         " is alternating (zero diagonal), so R = s sᵗ has no solution";
        return verdict;
    }
    SymplecticMap back = symplectic_inverse(la->f);
    std::optional<SymplecticMap> found;
    auto accept = [&](const BitMatrix &p) {
        if (!(p * p.transposed()).is_identity()) {
            return false;
        }
        SymplecticMap h{p, BitMatrix(m, m), BitMatrix(m, m), p};
        SymplecticMap f = compose(compose(back, h), lb->f);
        try {
            if (!classes_equal(transport(f, ga), gb)) {
                return false;
            }
        } catch (const SpecError &) {
            return false;
        }
        found = f;
        return true;
    };
    if (find_intertwiner(la->field_b, lb->field_b, accept)) {
        verdict.status = EquivStatus::Equivalent;
        verdict.map = found;
        verdict.detail = found->t.is_zero() ? "anchor map with t = 0" : "anchor map";
        return verdict;
    }
    verdict.status = EquivStatus::NotFound;
    verdict.detail = "no orthogonal conjugation joins the field anchors of the two specs";
    return verdict;
}

std::string_view status_name(EquivStatus status) {
    switch (status) {
        case EquivStatus::Equivalent:
            return "equivalent";
        case EquivStatus::NotExpressible:
            return "NotExpressible";
        case EquivStatus::NotFound:
            return "not_found";
    }
    return "unknown";
}

}  // namespace mubforge
