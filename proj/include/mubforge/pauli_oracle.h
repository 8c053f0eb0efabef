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

#ifndef MUBFORGE_PAULI_ORACLE_H
#define MUBFORGE_PAULI_ORACLE_H

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "mubforge/bit_matrix.h"
#include "mubforge/construct.h"

namespace mubforge {

/// Dense numerics stop here (d = 64).
constexpr int kMaxNumericQubits = 6;

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// a = (z; x) in F2^(2m). Qubit 0 is the leftmost tensor factor, i.e. the most
/// significant bit of a computational basis index.
struct PauliLabel {
    BitVec z;
    BitVec x;

    /// Splits a length-2m vector into its z and x halves.
    static PauliLabel from_vector(const BitVec &a);
    BitVec to_vector() const;
    int m() const {
        return static_cast<int>(z.size());
    }
};

/// Tensor product over qubits of (-i)^(z_k x_k) Z^(z_k) X^(x_k). Hermitian and unitary.
ComplexMatrix pauli_matrix(const PauliLabel &a);

/// sum_k (a.z_k b.x_k + a.x_k b.z_k) mod 2; zero iff the two operators commute.
bool symplectic_product(const PauliLabel &a, const PauliLabel &b);

/// Common eigenbasis of the commuting group generated by the columns of `gen` (2m x m).
/// Column k is the joint eigenvector with sign s_i = (-1)^(bit m-1-i of k) for generator
/// column i, extracted from the rank-one projector prod_i (I + s_i P_i)/2 by taking its
/// largest-norm column. Phase: first nonzero component real positive. Throws
/// std::invalid_argument for dependent or non-commuting columns.
ComplexMatrix class_eigenbasis(const BitMatrix &gen);

struct MubSet {
    int m = 0;
    std::vector<ComplexMatrix> bases;
};

/// One eigenbasis per class generator.
MubSet mub_set(const GeneratorSet &gens);

struct MubCheck {
    double max_deviation = 0;
    bool pass = false;
};

/// max over cross-basis column pairs of | |<psi|phi>|^2 - 1/d |; pass iff <= tol and every
/// basis is unitary within tol.
MubCheck verify_mub(const MubSet &set, double tol);

/// max |U^dagger U - I| entry.
double unitarity_deviation(const ComplexMatrix &u);

/// Largest off-diagonal magnitude of U^dagger P U over every nonidentity P in the class.
double class_diagonalization_residue(const BitMatrix &gen, const ComplexMatrix &u);

/// Rank of the vector reshaped as (qubits in `block`) x (the rest), counting singular
/// values above tol times the largest.
int schmidt_rank(const ComplexVector &psi, const std::vector<size_t> &block, double tol = 1e-9);

}  // namespace mubforge

#endif
