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

#ifndef MUBFORGE_ENTANGLE_H
#define MUBFORGE_ENTANGLE_H

#include <vector>

#include "mubforge/construct.h"

namespace mubforge {

/// Block sizes of a tensor factorization, largest first.
using Partition = std::vector<int>;

/// All partitions of m in canonical order: ascending by largest part, ties broken by the
/// next part, so (1,...,1) comes first and (m) last.
std::vector<Partition> canonical_partitions(int m);

struct EntanglementVector {
    int m = 0;
    std::vector<Partition> partitions;
    std::vector<uint64_t> counts;

    /// Number of completely factorizable bases.
    uint64_t factorizable() const {
        return counts.empty() ? 0 : counts.front();
    }
    friend bool operator==(const EntanglementVector &, const EntanglementVector &) = default;
};

/// Tensor-factor blocks of one class: the Z basis splits into single qubits; a class
/// (M; I) with M symmetric splits along the connected components of M's off-diagonal
/// graph (restricting the symplectic product to a qubit subset S gives c^t (M P_S + P_S M) c',
/// which vanishes for all c, c' exactly when S is a union of components). Throws
/// std::invalid_argument for a non-symmetric M.
std::vector<std::vector<size_t>> factor_blocks(const StandardForm &entry, int m);

Partition partition_of(const StandardForm &entry, int m);

/// Histogram of partition_of over all d+1 classes, in canonical order.
EntanglementVector entanglement_vector(const GeneratorSet &gens);

uint64_t count_factorizable(const GeneratorSet &gens);

}  // namespace mubforge

#endif
