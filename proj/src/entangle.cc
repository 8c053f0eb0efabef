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

#include "mubforge/entangle.h"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace mubforge {

std::vector<Partition> canonical_partitions(int m) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; p--) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(m, m);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<size_t>> factor_blocks(const StandardForm &entry, int m) {
    if (entry.z_basis) {
        std::vector<std::vector<size_t>> singles;
        for (int i = 0; i < m; i++) {
            singles.push_back({static_cast<size_t>(i)});
        }
        return singles;
    }
    if (!entry.m.is_symmetric() || static_cast<int>(entry.m.rows()) != m) {
        throw std::invalid_argument("standard form must be a symmetric m x m matrix");
    }
    return offdiag_components(entry.m);
}

Partition partition_of(const StandardForm &entry, int m) {
    Partition p;
    for (const auto &block : factor_blocks(entry, m)) {
        p.push_back(static_cast<int>(block.size()));
    }
    std::sort(p.rbegin(), p.rend());
    return p;
}

EntanglementVector entanglement_vector(const GeneratorSet &gens) {
    EntanglementVector v;
    v.m = gens.m;
    v.partitions = canonical_partitions(gens.m);
    v.counts.assign(v.partitions.size(), 0);
    for (const auto &sf : gens.standard_forms) {
        Partition p = partition_of(sf, gens.m);
        auto it = std::lower_bound(v.partitions.begin(), v.partitions.end(), p);
        v.counts[it - v.partitions.begin()]++;
    }
    return v;
}

uint64_t count_factorizable(const GeneratorSet &gens) {
    return entanglement_vector(gens).factorizable();
}

}  // namespace mubforge
