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

#include "mubforge/pauli_oracle.h"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace mubforge {

namespace {

// A Pauli operator is monomial: |j> -> phase(j) |j ^ x>.
struct Monomial {
    uint64_t x = 0;
    uint64_t z = 0;
    Complex global{1, 0};

    Complex phase(uint64_t j) const {
        return (std::popcount(z & (j ^ x)) & 1) ? -global : global;
    }

    ComplexVector apply(const ComplexVector &v) const {
        ComplexVector out(v.size());
        for (Eigen::Index j = 0; j < v.size(); j++) {
            uint64_t target = static_cast<uint64_t>(j) ^ x;
            out(target) = phase(static_cast<uint64_t>(j)) * v(j);
        }
        return out;
    }
};

Complex minus_i_pow(int k) {
    switch (k & 3) {
        case 0:
            return {1, 0};
        case 1:
            return {0, -1};
        case 2:
            return {-1, 0};
        default:
            return {0, 1};
    }
}

Monomial monomial_of(const PauliLabel &a) {
    int m = a.m();
    Monomial p;
    for (int k = 0; k < m; k++) {
        uint64_t bit = uint64_t{1} << (m - 1 - k);
        if (a.z.get(k)) {
            p.z |= bit;
        }
        if (a.x.get(k)) {
            p.x |= bit;
        }
    }
    p.global = minus_i_pow(std::popcount(p.z & p.x));
    return p;
}

void check_numeric_size(int m) {
    if (m < 1 || m > kMaxNumericQubits) {
        throw std::invalid_argument("numeric oracle supports 1 <= m <= " + std::to_string(kMaxNumericQubits));
    }
}

std::vector<Monomial> class_generators(const BitMatrix &gen) {
    if (gen.rows() != 2 * gen.cols()) {
        throw std::invalid_argument("class generator must be 2m x m");
    }
    int m = static_cast<int>(gen.cols());
    check_numeric_size(m);
    if (rank(gen) != gen.cols()) {
        throw std::invalid_argument("class generator columns are dependent");
    }
    BitMatrix j = symplectic_form(m);
    if (!(gen.transposed() * j * gen).is_zero()) {
        throw std::invalid_argument("class generator columns do not commute");
    }
    std::vector<Monomial> out;
    for (int c = 0; c < m; c++) {
        out.push_back(monomial_of(PauliLabel::from_vector(gen.col(c))));
    }
    return out;
}

}  // namespace

PauliLabel PauliLabel::from_vector(const BitVec &a) {
    if (a.size() % 2 != 0 || a.size() == 0) {
        throw std::invalid_argument("Pauli label needs an even, nonzero length");
    }
    size_t m = a.size() / 2;
    PauliLabel p{BitVec(m), BitVec(m)};
    for (size_t k = 0; k < m; k++) {
        p.z.set(k, a.get(k));
        p.x.set(k, a.get(m + k));
    }
    return p;
}

BitVec PauliLabel::to_vector() const {
    size_t m = z.size();
    BitVec a(2 * m);
    for (size_t k = 0; k < m; k++) {
        a.set(k, z.get(k));
        a.set(m + k, x.get(k));
    }
    return a;
}

ComplexMatrix pauli_matrix(const PauliLabel &a) {
    if (a.z.size() != a.x.size()) {
        throw std::invalid_argument("Pauli label halves differ in length");
    }
    check_numeric_size(a.m());
    Monomial p = monomial_of(a);
    Eigen::Index d = Eigen::Index{1} << a.m();
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    for (Eigen::Index j = 0; j < d; j++) {
        out(static_cast<Eigen::Index>(static_cast<uint64_t>(j) ^ p.x), j) = p.phase(static_cast<uint64_t>(j));
    }
    return out;
}

bool symplectic_product(const PauliLabel &a, const PauliLabel &b) {
    return a.z.dot(b.x) ^ a.x.dot(b.z);
}

ComplexMatrix class_eigenbasis(const BitMatrix &gen) {
    auto paulis = class_generators(gen);
    int m = static_cast<int>(gen.cols());
    Eigen::Index d = Eigen::Index{1} << m;
    ComplexMatrix basis(d, d);
    for (Eigen::Index k = 0; k < d; k++) {
        ComplexVector best;
        double best_norm = -1;
        for (Eigen::Index c = 0; c < d; c++) {
            ComplexVector v = ComplexVector::Zero(d);
            v(c) = 1;
            for (int i = 0; i < m; i++) {
                bool negative = (static_cast<uint64_t>(k) >> (m - 1 - i)) & 1;
                ComplexVector pv = paulis[i].apply(v);
                v = negative ? ComplexVector((v - pv) * 0.5) : ComplexVector((v + pv) * 0.5);
            }
            double n = v.norm();
            if (n > best_norm) {
                best_norm = n;
                best = std::move(v);
            }
        }
        best /= best_norm;
        for (Eigen::Index r = 0; r < d; r++) {
            double mag = std::abs(best(r));
            if (mag > 1e-12) {
                best *= std::conj(best(r)) / mag;
                best(r) = mag;
                break;
            }
        }
        basis.col(k) = best;
    }
    return basis;
}

MubSet mub_set(const GeneratorSet &gens) {
    check_numeric_size(gens.m);
    MubSet set;
    set.m = gens.m;
    for (const auto &g : gens.generators) {
        set.bases.push_back(class_eigenbasis(g));
    }
    return set;
}

double unitarity_deviation(const ComplexMatrix &u) {
    ComplexMatrix e = u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols());
    return e.cwiseAbs().maxCoeff();
}

MubCheck verify_mub(const MubSet &set, double tol) {
    MubCheck check;
    if (set.bases.empty()) {
        return check;
    }
    double d = static_cast<double>(set.bases.front().rows());
    bool unitary = true;
    for (const auto &u : set.bases) {
        if (unitarity_deviation(u) > tol) {
            unitary = false;
        }
    }
    for (size_t a = 0; a < set.bases.size(); a++) {
        for (size_t b = a + 1; b < set.bases.size(); b++) {
            ComplexMatrix overlaps = set.bases[a].adjoint() * set.bases[b];
            double dev = (overlaps.cwiseAbs2().array() - 1.0 / d).abs().maxCoeff();
            check.max_deviation = std::max(check.max_deviation, dev);
        }
    }
    check.pass = unitary && check.max_deviation <= tol;
    return check;
}

double class_diagonalization_residue(const BitMatrix &gen, const ComplexMatrix &u) {
    auto paulis = class_generators(gen);
    int m = static_cast<int>(gen.cols());
    double residue = 0;
    for (uint64_t c = 1; c < (uint64_t{1} << m); c++) {
        BitVec coeffs(m);
        for (int i = 0; i < m; i++) {
            coeffs.set(i, (c >> i) & 1);
        }
        ComplexMatrix p = pauli_matrix(PauliLabel::from_vector(gen * coeffs));
        ComplexMatrix t = u.adjoint() * p * u;
        t.diagonal().setZero();
        residue = std::max(residue, t.cwiseAbs().maxCoeff());
    }
    return residue;
}

int schmidt_rank(const ComplexVector &psi, const std::vector<size_t> &block, double tol) {
    int m = std::countr_zero(static_cast<uint64_t>(psi.size()));
    if (psi.size() != (Eigen::Index{1} << m) || block.empty()) {
        throw std::invalid_argument("schmidt_rank needs a 2^m vector and a nonempty block");
    }
    std::vector<bool> in_block(m, false);
    for (size_t q : block) {
        if (q >= static_cast<size_t>(m)) {
            throw std::invalid_argument("schmidt_rank block qubit out of range");
        }
        in_block[q] = true;
    }
    std::vector<int> inside, outside;
    for (int q = 0; q < m; q++) {
        (in_block[q] ? inside : outside).push_back(q);
    }
    ComplexMatrix reshaped = ComplexMatrix::Zero(Eigen::Index{1} << inside.size(), Eigen::Index{1} << outside.size());
    for (Eigen::Index j = 0; j < psi.size(); j++) {
        uint64_t row = 0, col = 0;
        for (int q : inside) {
            row = (row << 1) | ((static_cast<uint64_t>(j) >> (m - 1 - q)) & 1);
        }
        for (int q : outside) {
            col = (col << 1) | ((static_cast<uint64_t>(j) >> (m - 1 - q)) & 1);
        }
        reshaped(row, col) = psi(j);
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(reshaped);
    const auto &sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0) {
        return 0;
    }
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); i++) {
        if (sv(i) > tol * sv(0)) {
            r++;
        }
    }
    return r;
}

}  // namespace mubforge
