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

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "mubforge/search.h"

namespace mubforge {
namespace {

// Finest split into qubit subsets S with M(i,k) = 0 for every i in S and k outside S:
// the minimal nonempty closed subsets, found by checking every subset.
Partition partition_by_subsets(const BitMatrix &m) {
    size_t n = m.rows();
    auto closed = [&](uint64_t s) {
        for (size_t i = 0; i < n; i++) {
            for (size_t k = 0; k < n; k++) {
                if (((s >> i) & 1) && !((s >> k) & 1) && m.get(i, k)) {
                    return false;
                }
            }
        }
        return true;
    };
    uint64_t covered = 0;
    Partition p;
    for (size_t q = 0; q < n; q++) {
        if ((covered >> q) & 1) {
            continue;
        }
        uint64_t best = 0;
        int best_size = 1 << 30;
        for (uint64_t s = 1; s < (uint64_t{1} << n); s++) {
            if (((s >> q) & 1) && closed(s) && std::popcount(s) < best_size) {
                best = s;
                best_size = std::popcount(s);
            }
        }
        covered |= best;
        p.push_back(best_size);
    }
    std::sort(p.rbegin(), p.rend());
    return p;
}

TEST(Entangle, CanonicalPartitions) {
    EXPECT_EQ(canonical_partitions(1), (std::vector<Partition>{{1}}));
    EXPECT_EQ(canonical_partitions(3), (std::vector<Partition>{{1, 1, 1}, {2, 1}, {3}}));
    EXPECT_EQ(canonical_partitions(4), (std::vector<Partition>{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}}));
    const size_t counts[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int m = 1; m <= 10; m++) {
        EXPECT_EQ(canonical_partitions(m).size(), counts[m - 1]);
    }
}

TEST(Entangle, PartitionMatchesSubsetOracle) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; trial++) {
        size_t n = 1 + rng() % 7;
        BitMatrix m(n, n);
        for (size_t i = 0; i < n; i++) {
            for (size_t k = i; k < n; k++) {
                bool bit = rng() % 5 == 0;
                m.set(i, k, bit);
                m.set(k, i, bit);
            }
        }
        ASSERT_EQ(partition_of(StandardForm::Matrix(m), static_cast<int>(n)), partition_by_subsets(m))
            << m.to_text();
    }
    EXPECT_EQ(partition_of(StandardForm::ZBasis(), 4), (Partition{1, 1, 1, 1}));
    EXPECT_THROW(factor_blocks(StandardForm::Matrix(BitMatrix{{0, 1}, {0, 0}}), 2), std::invalid_argument);
}

TEST(Entangle, TwoQubitFieldSet) {
    for (const auto &b : search_B(2, SearchMode::Exhaustive, 0, 0, 1)) {
        auto v = entanglement_vector(generators(StabilizerSpec::field(b)));
        EXPECT_EQ(v.counts, (std::vector<uint64_t>{3, 2}));
        EXPECT_EQ(v.factorizable(), 3u);
    }
}

TEST(Entangle, FieldSetsHaveThreeFactorizableBases) {
    for (int m = 1; m <= 5; m++) {
        for (const auto &b : search_B(m, SearchMode::Exhaustive, 0, 4, 1)) {
            auto v = entanglement_vector(generators(StabilizerSpec::field(b)));
            EXPECT_EQ(v.factorizable(), 3u) << b.to_text();
            uint64_t total = 0;
            for (auto c : v.counts) {
                total += c;
            }
            EXPECT_EQ(total, (uint64_t{1} << m) + 1);
        }
    }
}

TEST(Entangle, GroupAndSemigroupCounts) {
    for (int m = 3; m <= 4; m++) {
        SearchOptions opts;
        opts.m = m;
        opts.kind = SetKind::Group;
        opts.count = 3;
        for (const auto &s : search_specs(opts).specs) {
            EXPECT_EQ(count_factorizable(generators(s)), 2u);
        }
    }
    SearchOptions opts;
    opts.m = 4;
    opts.kind = SetKind::Semigroup;
    opts.count = 3;
    auto specs = search_specs(opts).specs;
    ASSERT_EQ(specs.size(), 3u);
    for (const auto &s : specs) {
        EXPECT_EQ(count_factorizable(generators(s)), 1u);
    }
}

}  // namespace
}  // namespace mubforge
