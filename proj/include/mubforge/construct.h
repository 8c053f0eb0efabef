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

#ifndef MUBFORGE_CONSTRUCT_H
#define MUBFORGE_CONSTRUCT_H

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mubforge/bit_matrix.h"

namespace mubforge {

/// Largest qubit count handled by the construction layer.
constexpr int kMaxQubits = 16;

enum class SetKind { Field, Group, Semigroup };

std::string_view kind_name(SetKind kind);
/// Parses "field" / "group" / "semigroup"; throws std::invalid_argument otherwise.
SetKind parse_kind(std::string_view name);

/// Recipe for one complete cyclic set.
///
/// Field sets use R = I and A = 0; group sets use A = 0. For field sets B must be
/// symmetric. For group and semigroup sets B only has to be invertible with R and BR
/// symmetric: a symmetric B with irreducible characteristic polynomial admits only
/// symmetrizers that are polynomials in B.
struct StabilizerSpec {
    SetKind kind = SetKind::Field;
    int m = 0;
    BitMatrix b;
    BitMatrix r;
    BitMatrix a;

    static StabilizerSpec field(const BitMatrix &b);
    static StabilizerSpec group(const BitMatrix &b, const BitMatrix &r);
    static StabilizerSpec semigroup(const BitMatrix &b, const BitMatrix &r, const BitMatrix &a);

    uint64_t dimension() const {
        return uint64_t{1} << m;
    }
    friend bool operator==(const StabilizerSpec &, const StabilizerSpec &) = default;
};

/// Raised when a spec or generator set breaks a construction invariant. The message
/// names the failing condition.
class SpecError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Every violated condition, each as a human-readable sentence. Empty when valid.
std::vector<std::string> spec_violations(const StabilizerSpec &spec);
/// Throws SpecError carrying the first violation.
void check_spec(const StabilizerSpec &spec);

/// Fibonacci index of char_poly(b), or nullopt when that polynomial is reducible.
std::optional<uint64_t> char_poly_index(const BitMatrix &b);

/// J = [[0, I], [I, 0]] of size 2m.
BitMatrix symplectic_form(size_t m);
/// X^t J X == J.
bool preserves_symplectic_form(const BitMatrix &x);

/// C = [[B + A R^-1, R + B A + A R^-1 A], [R^-1, R^-1 A]], which reduces to
/// [[B, R], [R^-1, 0]] for A = 0 and [[B, I], [I, 0]] for R = I.
BitMatrix build_stabilizer(const StabilizerSpec &spec);
BitMatrix stabilizer_power(const BitMatrix &c, uint64_t j);
/// C^(d+1) = I and C^j != I for 1 <= j <= d.
bool cyclicity_check(const BitMatrix &c, uint64_t d);

/// One class in standard form: either the Z basis (generator spans (I; 0)) or (M; I).
struct StandardForm {
    bool z_basis = false;
    BitMatrix m;

    static StandardForm ZBasis() {
        return {true, {}};
    }
    static StandardForm Matrix(BitMatrix m) {
        return {false, std::move(m)};
    }
    friend bool operator==(const StandardForm &, const StandardForm &) = default;
    friend auto operator<=>(const StandardForm &a, const StandardForm &b) {
        if (a.z_basis != b.z_basis) {
            return a.z_basis ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return a.m <=> b.m;
    }
};

/// Normalizes a 2m x m generator: (U; L) with L invertible becomes (U L^-1; I); (U; 0)
/// with U invertible is the Z basis. Anything else throws SpecError.
StandardForm standard_form(const BitMatrix &generator);

struct GeneratorSet {
    int m = 0;
    /// G_0 .. G_d, each 2m x m.
    std::vector<BitMatrix> generators;
    std::vector<StandardForm> standard_forms;
};

/// G_j = C^j G_0 for j = 0..d with G_0 = (I; 0), plus their standard forms. Throws
/// SpecError when a lower block is singular for some 1 <= j <= d.
GeneratorSet generators(const StabilizerSpec &spec);

/// Standard forms symmetric and the d+1 classes {G_j c : c != 0} partition the 4^m - 1
/// nonidentity Pauli labels, each class commuting internally.
bool class_partition_ok(const GeneratorSet &gens);
/// Same check by explicit enumeration of all labels; m <= 10.
bool class_partition_ok_enumerated(const GeneratorSet &gens);

/// {M_1..M_d} has 2^m distinct elements, contains 0 and I, and is closed under addition
/// and multiplication. Meaningful for field sets; m <= 10.
bool field_closure_check(const GeneratorSet &gens);

/// Basis of {R : R = R^t, (BR)^t = BR}.
std::vector<BitMatrix> symmetrizer_space(const BitMatrix &b);
/// X in span{I, B, ..., B^(m-1)}.
bool is_polynomial_in(const BitMatrix &b, const BitMatrix &x);
/// Invertible symmetrizer of B, optionally restricted to non-polynomials in B. Among the
/// admissible elements of the space, involutions (R^2 = I) come first, then lexicographic.
std::optional<BitMatrix> find_symmetrizer(const BitMatrix &b, bool require_nonpoly);

/// True when A lies in span{B^k R} + diagonal matrices, i.e. some class of the semigroup
/// set would be completely factorizable.
bool span_excluded(const BitMatrix &b, const BitMatrix &r, const BitMatrix &a);
/// Lexicographically first symmetric A that is not excluded.
std::optional<BitMatrix> find_A(const BitMatrix &b, const BitMatrix &r);

/// Symmetric m x m matrix from its upper-triangle bits, entry (0,0) in the most
/// significant of the m(m+1)/2 low bits. Counting up enumerates lexicographic order.
BitMatrix symmetric_from_bits(size_t m, uint64_t bits);
/// General m x m matrix from m^2 bits, entry (0,0) most significant.
BitMatrix matrix_from_bits(size_t m, uint64_t bits);

}  // namespace mubforge

#endif
