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

#include <gtest/gtest.h>

#include <random>
#include <unsupported/Eigen/KroneckerProduct>

#include "mubforge/entangle.h"
#include "mubforge/search.h"

namespace mubforge {
namespace {

using cd = std::complex<double>;

// Kronecker product of single-qubit matrices, qubit 0 leftmost.
ComplexMatrix pauli_by_kron(const PauliLabel &a) {
    ComplexMatrix x(2, 2), z(2, 2), y(2, 2), id = ComplexMatrix::Identity(2, 2);
    x << 0, 1, 1, 0;
    z << 1, 0, 0, -1;
    y << 0, cd(0, -1), cd(0, 1), 0;
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (int k = 0; k < a.m(); k++) {
        bool zk = a.z.get(k), xk = a.x.get(k);
        const ComplexMatrix &f = zk && xk ? y : zk ? z : xk ? x : id;
        out = Eigen::kroneckerProduct(out, f).eval();
    }
    return out;
}

PauliLabel random_label(int m, std::mt19937_64 &rng) {
    PauliLabel p{BitVec(m), BitVec(m)};
    for (int k = 0; k < m; k++) {
        p.z.set(k, rng() & 1);
        p.x.set(k, rng() & 1);
    }
    return p;
}

std::vector<StabilizerSpec> small_specs() {
    std::vector<StabilizerSpec> specs;
    for (int m = 1; m <= 4; m++) {
        for (const auto &b : search_B(m, SearchMode::Exhaustive, 0, 2, 1)) {
            specs.push_back(StabilizerSpec::field(b));
        }
    }
    for (int m = 3; m <= 4; m++) {
        for (SetKind kind : {SetKind::Group, SetKind::Semigroup}) {
            SearchOptions opts;
            opts.m = m;
            opts.kind = kind;
            opts.count = 2;
            for (auto &s : search_specs(opts).specs) {
                specs.push_back(s);
            }
        }
    }
    return specs;
}

TEST(PauliOracle, MatchesKroneckerDefinition) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; trial++) {
        int m = 1 + rng() % 4;
        PauliLabel a = random_label(m, rng);
        ComplexMatrix p = pauli_matrix(a);
        EXPECT_LT((p - pauli_by_kron(a)).cwiseAbs().maxCoeff(), 1e-15);
        EXPECT_LT((p - p.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
        EXPECT_LT(unitarity_deviation(p), 1e-15);
        EXPECT_EQ(PauliLabel::from_vector(a.to_vector()).to_vector(), a.to_vector());
    }
}

TEST(PauliOracle, CommutationFollowsSymplecticProduct) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; trial++) {
        int m = 1 + rng() % 3;
        PauliLabel a = random_label(m, rng), b = random_label(m, rng);
        ComplexMatrix pa = pauli_matrix(a), pb = pauli_matrix(b);
        double sign = symplectic_product(a, b) ? -1.0 : 1.0;
        EXPECT_LT((pa * pb - sign * pb * pa).cwiseAbs().maxCoeff(), 1e-14);
    }
}

TEST(PauliOracle, EigenbasisDiagonalizesClass) {
    for (const auto &spec : small_specs()) {
        GeneratorSet g = generators(spec);
        for (const auto &gen : g.generators) {
            ComplexMatrix u = class_eigenbasis(gen);
            EXPECT_LT(unitarity_deviation(u), 1e-12);
            EXPECT_LT(class_diagonalization_residue(gen, u), 1e-12);
            // Column k carries sign (-1)^(bit m-1-i of k) for generator column i.
            for (int i = 0; i < spec.m; i++) {
                ComplexMatrix d = u.adjoint() * pauli_matrix(PauliLabel::from_vector(gen.col(i))) * u;
                for (Eigen::Index k = 0; k < u.cols(); k++) {
                    double want = ((k >> (spec.m - 1 - i)) & 1) ? -1.0 : 1.0;
                    EXPECT_NEAR(d(k, k).real(), want, 1e-12);
                }
            }
        }
    }
}

TEST(PauliOracle, ConstructedSetsAreUnbiased) {
    for (const auto &spec : small_specs()) {
        MubCheck c = verify_mub(mub_set(generators(spec)), 1e-12);
        EXPECT_TRUE(c.pass) << c.max_deviation;
        EXPECT_LT(c.max_deviation, 1e-12);
    }
}

TEST(PauliOracle, RepeatedBasisIsNotUnbiased) {
    GeneratorSet g = generators(StabilizerSpec::field(BitMatrix{{1}}));
    MubSet set = mub_set(g);
    set.bases.push_back(set.bases.front());
    MubCheck c = verify_mub(set, 1e-10);
    EXPECT_FALSE(c.pass);
    EXPECT_NEAR(c.max_deviation, 0.5, 1e-12);
}

TEST(PauliOracle, RejectsInvalidClasses) {
    // Z and X on qubit 0 anticommute.
    BitMatrix anti{{1, 0}, {0, 0}, {0, 1}, {0, 0}};
    EXPECT_THROW(class_eigenbasis(anti), std::invalid_argument);
    BitMatrix dependent{{1, 1}, {0, 0}, {0, 0}, {0, 0}};
    EXPECT_THROW(class_eigenbasis(dependent), std::invalid_argument);
}

TEST(PauliOracle, SchmidtRankBasics) {
    ComplexVector bell = ComplexVector::Zero(4);
    bell(0) = bell(3) = 1 / std::sqrt(2.0);
    EXPECT_EQ(schmidt_rank(bell, {0}), 2);
    ComplexVector prod = ComplexVector::Zero(8);
    prod(0) = prod(1) = 1 / std::sqrt(2.0);  // |00>|+>
    EXPECT_EQ(schmidt_rank(prod, {2}), 1);
    EXPECT_EQ(schmidt_rank(prod, {0, 1}), 1);
    ComplexVector ghz = ComplexVector::Zero(8);
    ghz(0) = ghz(7) = 1 / std::sqrt(2.0);
    EXPECT_EQ(schmidt_rank(ghz, {1}), 2);
    EXPECT_THROW(schmidt_rank(ghz, {3}), std::invalid_argument);
}

// Every basis vector is a product across the graph blocks, and every multi-qubit block
// has, for each of its qubits, some vector entangled across that qubit.
TEST(PauliOracle, GraphPartitionMatchesSchmidtRanks) {
    for (const auto &spec : small_specs()) {
        GeneratorSet g = generators(spec);
        for (size_t j = 0; j < g.generators.size(); j++) {
            ComplexMatrix u = class_eigenbasis(g.generators[j]);
            for (const auto &block : factor_blocks(g.standard_forms[j], spec.m)) {
                if (block.size() < static_cast<size_t>(spec.m)) {
                    for (Eigen::Index k = 0; k < u.cols(); k++) {
                        ASSERT_EQ(schmidt_rank(u.col(k), block), 1) << "class " << j;
                    }
                }
                if (block.size() < 2) {
                    continue;
                }
                for (size_t q : block) {
                    int worst = 1;
                    for (Eigen::Index k = 0; k < u.cols(); k++) {
                        worst = std::max(worst, schmidt_rank(u.col(k), {q}));
                    }
                    EXPECT_GT(worst, 1) << "class " << j << " qubit " << q;
                }
            }
        }
    }
}

}  // namespace
}  // namespace mubforge
