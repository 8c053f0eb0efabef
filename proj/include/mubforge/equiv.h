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

#ifndef MUBFORGE_EQUIV_H
#define MUBFORGE_EQUIV_H

#include <functional>
#include <optional>
#include <string>

#include "mubforge/construct.h"

namespace mubforge {

/// f = [[s, t], [u, v]] acting on Pauli labels (z; x).
struct SymplecticMap {
    BitMatrix s, t, u, v;

    static SymplecticMap identity(size_t m);
    static SymplecticMap from_full(const BitMatrix &f);
    BitMatrix full() const;
    size_t m() const {
        return s.rows();
    }
    friend bool operator==(const SymplecticMap &, const SymplecticMap &) = default;
};

/// fᵗJf = J. False for mismatched block shapes.
bool is_symplectic(const SymplecticMap &f);

/// a then b, i.e. the map b·a.
SymplecticMap compose(const SymplecticMap &a, const SymplecticMap &b);

/// J fᵗ J. Only meaningful for symplectic f.
SymplecticMap symplectic_inverse(const SymplecticMap &f);

/// Invertible g with gᵗg = R by congruence diagonalization, or nullopt when R is not
/// congruent to the identity (all-zero diagonal). Throws std::invalid_argument unless R is
/// square, symmetric and invertible.
std::optional<BitMatrix> gram_factor(const BitMatrix &r);

/// Left-multiplies every generator by f and recomputes standard forms. Throws
/// std::invalid_argument for non-symplectic f and SpecError when a transported class has
/// a singular, nonzero lower block.
GeneratorSet transport(const SymplecticMap &f, const GeneratorSet &gens);

/// Same unordered collection of column spaces.
bool classes_equal(const GeneratorSet &a, const GeneratorSet &b);

/// The block map [[s, t], [0, s^-t]] carrying the field set of `field_b` onto the set of a
/// group/semigroup spec: s sᵗ = R, B = s field_b s⁻¹, t = A s^-t.
struct AnchorMap {
    SymplecticMap f;
    BitMatrix field_b;
};

/// Identity map for field specs; nullopt when R is alternating.
std::optional<AnchorMap> anchor_map(const StabilizerSpec &spec);

/// Enumerates X with X·from = to·X (at most 2^20 solutions scanned) and returns the first,
/// in Gray-code order over the solution space, that satisfies `accept`.
std::optional<BitMatrix> find_intertwiner(const BitMatrix &from, const BitMatrix &to,
                                          const std::function<bool(const BitMatrix &)> &accept);

enum class EquivStatus { Equivalent, NotExpressible, NotFound };

struct EquivVerdict {
    EquivStatus status = EquivStatus::NotFound;
    std::optional<SymplecticMap> map;
    std::string detail;
};

/// Searches a symplectic map carrying the classes of `a` onto those of `b`: identity first,
/// then field anchors of both sides joined by an orthogonal conjugation. Throws
/// std::invalid_argument when m differs.
EquivVerdict equivalence(const StabilizerSpec &a, const StabilizerSpec &b);

std::string_view status_name(EquivStatus status);

}  // namespace mubforge

#endif
