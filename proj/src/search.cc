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

#include "mubforge/search.h"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace mubforge {

namespace {

constexpr uint64_t kChunk = uint64_t{1} << 12;

// Memoizes "char poly has index 2^m + 1" by the packed polynomial.
class IndexCache {
   public:
    explicit IndexCache(int m) : want_((uint64_t{1} << m) + 1) {
    }

    bool full_index(const BitMatrix &b) {
        Poly2 p = char_poly(b);
        uint64_t key = p.low_word();
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            return it->second;
        }
        bool ok = is_irreducible(p) && fibonacci_index(p) == want_;
        memo_.emplace(key, ok);
        return ok;
    }

   private:
    uint64_t want_;
    std::unordered_map<uint64_t, bool> memo_;
};

bool valid_field_candidate(const BitMatrix &b, IndexCache &cache) {
    return b.is_symmetric() && is_invertible(b) && cache.full_index(b);
}

BitMatrix random_symmetric(size_t m, std::mt19937_64 &rng) {
    BitMatrix s(m, m);
    uint64_t word = 0;
    size_t t = 0;
    for (size_t i = 0; i < m; i++) {
        for (size_t k = i; k < m; k++, t++) {
            if (t % 64 == 0) {
                word = rng();
            }
            if ((word >> (t % 64)) & 1) {
                s.set(i, k, true);
                s.set(k, i, true);
            }
        }
    }
    return s;
}

BitMatrix random_general(size_t m, std::mt19937_64 &rng) {
    BitMatrix s(m, m);
    uint64_t word = 0;
    for (size_t t = 0; t < m * m; t++) {
        if (t % 64 == 0) {
            word = rng();
        }
        if ((word >> (t % 64)) & 1) {
            s.set(t / m, t % m, true);
        }
    }
    return s;
}

void check_m(int m) {
    if (m < 1 || m > kMaxQubits) {
        throw std::invalid_argument("m must be in 1.." + std::to_string(kMaxQubits));
    }
}

// Calls visit(B, R) for group candidates in scan order until it returns false.
// Returns the number of B with full index that were looked at.
template <typename Visit>
uint64_t scan_group_candidates(int m, SearchMode mode, uint64_t seed, Visit visit) {
    IndexCache cache(m);
    uint64_t with_index = 0;
    auto consider = [&](const BitMatrix &b) {
        if (!is_invertible(b) || !cache.full_index(b)) {
            return true;
        }
        with_index++;
        auto r = find_symmetrizer(b, true);
        if (!r) {
            return true;
        }
        return visit(b, *r);
    };
    if (mode == SearchMode::Exhaustive) {
        if (m > kMaxExhaustiveGeneralQubits) {
            throw std::invalid_argument("exhaustive group/semigroup scan supports m <= " +
                                        std::to_string(kMaxExhaustiveGeneralQubits));
        }
        uint64_t total = uint64_t{1} << (m * m);
        for (uint64_t bits = 0; bits < total; bits++) {
            if (!consider(matrix_from_bits(m, bits))) {
                break;
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        std::set<BitMatrix> seen;
        for (uint64_t attempt = 0; attempt < kRandomAttempts; attempt++) {
            BitMatrix b = random_general(m, rng);
            if (!seen.insert(b).second) {
                continue;
            }
            if (!consider(b)) {
                break;
            }
        }
    }
    return with_index;
}

}  // namespace

unsigned default_thread_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("MUBFORGE_THREADS")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) {
            return static_cast<unsigned>(std::min<long>(v, hw));
        }
    }
    return hw;
}

bool is_valid_field_b(const BitMatrix &b) {
    if (!b.is_square() || b.rows() < 1 || b.rows() > static_cast<size_t>(kMaxQubits)) {
        return false;
    }
    IndexCache cache(static_cast<int>(b.rows()));
    return valid_field_candidate(b, cache);
}

std::vector<BitMatrix> search_B(int m, SearchMode mode, uint64_t seed, size_t count, unsigned threads) {
    check_m(m);
    std::vector<BitMatrix> hits;
    if (mode == SearchMode::Random) {
        std::mt19937_64 rng(seed);
        IndexCache cache(m);
        std::set<BitMatrix> seen;
        for (uint64_t attempt = 0; attempt < kRandomAttempts && (count == 0 || hits.size() < count); attempt++) {
            BitMatrix b = random_symmetric(m, rng);
            if (seen.contains(b)) {
                continue;
            }
            seen.insert(b);
            if (valid_field_candidate(b, cache)) {
                hits.push_back(std::move(b));
            }
        }
        return hits;
    }

    if (m > kMaxExhaustiveFieldQubits) {
        throw std::invalid_argument("exhaustive field scan supports m <= " + std::to_string(kMaxExhaustiveFieldQubits));
    }
    if (threads == 0) {
        threads = default_thread_count();
    }
    uint64_t total = uint64_t{1} << (m * (m + 1) / 2);
    uint64_t chunks = (total + kChunk - 1) / kChunk;
    std::vector<IndexCache> caches(threads, IndexCache(m));
    // Rounds of `threads` consecutive chunks; hits are merged in chunk order so the
    // output is the same for any worker count.
    for (uint64_t first = 0; first < chunks; first += threads) {
        uint64_t in_round = std::min<uint64_t>(threads, chunks - first);
        std::vector<std::vector<BitMatrix>> found(in_round);
        auto work = [&](uint64_t slot) {
            uint64_t lo = (first + slot) * kChunk;
            uint64_t hi = std::min(total, lo + kChunk);
            for (uint64_t bits = lo; bits < hi; bits++) {
                BitMatrix b = symmetric_from_bits(m, bits);
                if (valid_field_candidate(b, caches[slot])) {
                    found[slot].push_back(std::move(b));
                }
            }
        };
        if (in_round == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (uint64_t slot = 0; slot < in_round; slot++) {
                pool.emplace_back(work, slot);
            }
            for (auto &t : pool) {
                t.join();
            }
        }
        for (auto &chunk_hits : found) {
            for (auto &b : chunk_hits) {
                hits.push_back(std::move(b));
                if (count != 0 && hits.size() == count) {
                    return hits;
                }
            }
        }
    }
    return hits;
}

SearchResult search_specs(const SearchOptions &options) {
    check_m(options.m);
    SearchResult result;
    const std::string where = " (m=" + std::to_string(options.m) + ")";
    auto enough = [&] { return options.count != 0 && result.specs.size() >= options.count; };

    switch (options.kind) {
        case SetKind::Field: {
            for (auto &b : search_B(options.m, options.mode, options.seed, options.count, options.threads)) {
                result.specs.push_back(StabilizerSpec::field(b));
            }
            if (result.specs.empty()) {
                result.warnings.push_back("no symmetric B with fibonacci index d+1 found" + where);
            }
            break;
        }
        case SetKind::Group: {
            uint64_t with_index = scan_group_candidates(
                options.m, options.mode, options.seed, [&](const BitMatrix &b, const BitMatrix &r) {
                    result.specs.push_back(StabilizerSpec::group(b, r));
                    return !enough();
                });
            if (result.specs.empty()) {
                result.warnings.push_back(with_index == 0 ? "no B with fibonacci index d+1 found" + where
                                                          : "no non-polynomial symmetrizer" + where);
            }
            break;
        }
        case SetKind::Semigroup: {
            uint64_t pairs = 0;
            uint64_t with_index = scan_group_candidates(
                options.m, options.mode, options.seed, [&](const BitMatrix &b, const BitMatrix &r) {
                    pairs++;
                    if (auto a = find_A(b, r)) {
                        result.specs.push_back(StabilizerSpec::semigroup(b, r, *a));
                    }
                    return !enough();
                });
            if (result.specs.empty()) {
                if (with_index == 0) {
                    result.warnings.push_back("no B with fibonacci index d+1 found" + where);
                } else if (pairs == 0) {
                    result.warnings.push_back("no non-polynomial symmetrizer" + where);
                } else {
                    result.warnings.push_back("no symmetric A outside span{p(B)R} + diagonal for any of " +
                                              std::to_string(pairs) + " (B, R) pairs" + where);
                }
            }
            break;
        }
    }
    if (!result.specs.empty() && options.count != 0 && result.specs.size() < options.count) {
        result.warnings.push_back("found " + std::to_string(result.specs.size()) + " of " +
                                  std::to_string(options.count) + " requested" + where);
    }
    return result;
}

}  // namespace mubforge
