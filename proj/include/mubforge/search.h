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

#ifndef MUBFORGE_SEARCH_H
#define MUBFORGE_SEARCH_H

#include <cstdint>
#include <string>
#include <vector>

#include "mubforge/construct.h"

namespace mubforge {

enum class SearchMode { Exhaustive, Random };

/// Symmetric m x m candidates run out of 64-bit counters past this size.
constexpr int kMaxExhaustiveFieldQubits = 10;
/// General m x m candidates (m^2 bits) for group and semigroup scans.
constexpr int kMaxExhaustiveGeneralQubits = 7;
/// Samples drawn in random mode before giving up.
constexpr uint64_t kRandomAttempts = uint64_t{1} << 20;

/// Symmetric, invertible B whose characteristic polynomial is irreducible with Fibonacci
/// index 2^m + 1.
bool is_valid_field_b(const BitMatrix &b);

/// Up to `count` valid field matrices (count = 0 means no limit). Exhaustive mode walks
/// the 2^(m(m+1)/2) symmetric matrices in lexicographic order; random mode samples them
/// with mt19937_64(seed) and drops repeats. `threads` = 0 picks the worker count from
/// MUBFORGE_THREADS or the hardware; the result never depends on it.
std::vector<BitMatrix> search_B(int m, SearchMode mode, uint64_t seed, size_t count, unsigned threads = 0);

struct SearchOptions {
    int m = 1;
    SetKind kind = SetKind::Field;
    SearchMode mode = SearchMode::Exhaustive;
    uint64_t seed = 0;
    /// 0 = unlimited.
    size_t count = 0;
    unsigned threads = 0;
};

struct SearchResult {
    std::vector<StabilizerSpec> specs;
    std::vector<std::string> warnings;
};

/// Full pipeline for one kind.
///
/// Field: search_B. Group: scan m x m matrices B (lexicographic or sampled), keep those
/// with the right index that admit a symmetrizer which is not a polynomial in B (these B
/// are never symmetric). Semigroup: additionally require a matrix A from find_A. Emits a
/// warning when nothing is found.
SearchResult search_specs(const SearchOptions &options);

/// Worker count from MUBFORGE_THREADS, else std::thread::hardware_concurrency().
unsigned default_thread_count();

}  // namespace mubforge

#endif
