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

#include "mubforge/construct.h"

#include <gtest/gtest.h>

#include <set>

#include "mubforge/entangle.h"
#include "mubforge/search.h"

namespace mubforge {
namespace {

std::vector<StabilizerSpec> sample_specs() {
    std::vector<StabilizerSpec> specs;
    for (int m = 1; m <= 4; m++) {
        for (const auto &b : search_B(m, SearchMode::Exhaustive, 0, 3, 1)) {
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

std::set<uint64_t> class_labels(const BitMatrix &g) {
    std::set<uint64_t> labels;
    size_t m = g.cols();
    for (uint64_t c = 1; c < (uint64_t{1} << m); c++) {
        uint64_t key = 0;
        for (size_t r = 0; r < g.rows(); r++) {
            bool bit = false;
            for (size_t k = 0; k < m; k++) {
                bit ^= g.get(r, k) && ((c >> k) & 1);
            }
            key |= uint64_t{bit} << r;
        }
        labels.insert(key);
    }
    return labels;
}

std::set<BitMatrix> polynomials_in(const BitMatrix &b) {
    size_t m = b.rows();
    std::set<BitMatrix> out;
    for (uint64_t bits = 0; bits < (uint64_t{1} << m); bits++) {
        out.insert(poly_eval(Poly2::from_bits(bits), b));
    }
    return out;
}

BitMatrix symmetric_with_char_poly(size_t m, const Poly2 &p) {
    for (uint64_t bits = 0; bits < (uint64_t{1} << (m * (m + 1) / 2)); bits++) {
        BitMatrix b = symmetric_from_bits(m, bits);
        if (char_poly(b) == p) {
            return b;
        }
    }
    return {};
}

TEST(Construct, SingleQubitFieldSet) {
    StabilizerSpec spec = StabilizerSpec::field(BitMatrix{{1}});
    BitMatrix c = build_stabilizer(spec);
    EXPECT_EQ(c, (BitMatrix{{1, 1}, {1, 0}}));
    EXPECT_FALSE(c.is_identity());
    EXPECT_FALSE((c * c).is_identity());
    EXPECT_TRUE((c * c * c).is_identity());
    GeneratorSet g = generators(spec);
    EXPECT_EQ(g.generators.size(), 3u);
    EXPECT_TRUE(class_partition_ok(g));
}

TEST(Construct, CyclicityMatchesRepeatedProducts) {
    for (const auto &spec : sample_specs()) {
        BitMatrix c = build_stabilizer(spec);
        EXPECT_TRUE(preserves_symplectic_form(c));
        uint64_t d = spec.dimension();
        BitMatrix p = BitMatrix::identity(2 * spec.m);
        for (uint64_t j = 1; j <= d; j++) {
            p = p * c;
            ASSERT_FALSE(p.is_identity()) << j;
        }
        EXPECT_TRUE((p * c).is_identity());
        EXPECT_TRUE(cyclicity_check(c, d));
        EXPECT_EQ(stabilizer_power(c, d + 1), BitMatrix::identity(2 * spec.m));
    }
    // The identity is symplectic but has order 1.
    BitMatrix c = BitMatrix::identity(2);
    EXPECT_FALSE(cyclicity_check(c, 2));
}

TEST(Construct, ClassesPartitionLabelsByEnumeration) {
    for (const auto &spec : sample_specs()) {
        GeneratorSet g = generators(spec);
        ASSERT_EQ(g.generators.size(), spec.dimension() + 1);
        std::set<uint64_t> all;
        size_t total = 0;
        BitMatrix j = symplectic_form(spec.m);
        for (size_t k = 0; k < g.generators.size(); k++) {
            const auto &gen = g.generators[k];
            EXPECT_TRUE((gen.transposed() * j * gen).is_zero());
            auto labels = class_labels(gen);
            EXPECT_EQ(labels.size(), spec.dimension() - 1);
            total += labels.size();
            all.insert(labels.begin(), labels.end());
            if (!g.standard_forms[k].z_basis) {
                EXPECT_TRUE(g.standard_forms[k].m.is_symmetric());
            }
        }
        EXPECT_EQ(total, all.size());
        EXPECT_EQ(all.size(), (uint64_t{1} << (2 * spec.m)) - 1);
        EXPECT_FALSE(all.contains(0));
        EXPECT_TRUE(class_partition_ok(g));
        EXPECT_TRUE(class_partition_ok_enumerated(g));
    }
}

TEST(Construct, BrokenSetsFailPartitionCheck) {
    GeneratorSet g = generators(StabilizerSpec::field(search_B(3, SearchMode::Exhaustive, 0, 1, 1).front()));
    GeneratorSet dup = g;
    dup.generators[2] = dup.generators[1];
    dup.standard_forms[2] = dup.standard_forms[1];
    EXPECT_FALSE(class_partition_ok(dup));
    EXPECT_FALSE(class_partition_ok_enumerated(dup));
}

TEST(Construct, FieldStandardFormsArePolynomialsInB) {
    for (const auto &b : search_B(3, SearchMode::Exhaustive, 0, 0, 1)) {
        GeneratorSet g = generators(StabilizerSpec::field(b));
        std::set<BitMatrix> forms;
        for (size_t k = 1; k < g.standard_forms.size(); k++) {
            forms.insert(g.standard_forms[k].m);
        }
        EXPECT_EQ(forms, polynomials_in(b));
        EXPECT_TRUE(field_closure_check(g));
    }
}

TEST(Construct, RejectsWrongIndexWithMessage) {
    BitMatrix b = symmetric_with_char_poly(3, Poly2::from_hex("D"));
    ASSERT_EQ(b.rows(), 3u);
    auto v = spec_violations(StabilizerSpec::field(b));
    ASSERT_FALSE(v.empty());
    EXPECT_NE(v.front().find("is 7"), std::string::npos) << v.front();
    EXPECT_NE(v.front().find("d+1 = 9"), std::string::npos) << v.front();
    EXPECT_THROW(build_stabilizer(StabilizerSpec::field(b)), SpecError);
}

TEST(Construct, RejectsBrokenSpecs) {
    BitMatrix b = search_B(3, SearchMode::Exhaustive, 0, 1, 1).front();
    BitMatrix nonsym{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
    EXPECT_FALSE(spec_violations(StabilizerSpec::field(nonsym)).empty());
    EXPECT_FALSE(spec_violations(StabilizerSpec::group(b, nonsym)).empty());
    EXPECT_FALSE(spec_violations(StabilizerSpec::group(b, BitMatrix(3, 3))).empty());
    SearchOptions opts;
    opts.m = 4;
    opts.kind = SetKind::Semigroup;
    opts.count = 1;
    StabilizerSpec s = search_specs(opts).specs.front();
    EXPECT_TRUE(spec_violations(s).empty());
    s.a.set(0, 1, !s.a.get(0, 1));
    EXPECT_FALSE(spec_violations(s).empty());
}

TEST(Construct, StandardFormRejectsSingularLowerBlock) {
    BitMatrix g{{1, 0}, {0, 1}, {1, 0}, {0, 0}};
    EXPECT_THROW(standard_form(g), SpecError);
    EXPECT_TRUE(standard_form(BitMatrix{{1, 1}, {0, 1}, {0, 0}, {0, 0}}).z_basis);
    StandardForm f = standard_form(BitMatrix{{1, 0}, {1, 1}, {0, 1}, {1, 0}});
    EXPECT_EQ(f.m, (BitMatrix{{0, 1}, {1, 1}}));
}

TEST(Construct, SymmetrizerSpaceMatchesBruteForce) {
    std::vector<BitMatrix> bs;
    for (int m = 2; m <= 4; m++) {
        for (uint64_t bits = 0; bits < (uint64_t{1} << (m * m)) && bs.size() < 40 * (m - 1); bits += 37) {
            bs.push_back(matrix_from_bits(m, bits));
        }
    }
    for (const auto &b : bs) {
        size_t m = b.rows();
        std::set<BitMatrix> brute;
        for (uint64_t bits = 0; bits < (uint64_t{1} << (m * (m + 1) / 2)); bits++) {
            BitMatrix r = symmetric_from_bits(m, bits);
            if ((b * r).is_symmetric()) {
                brute.insert(r);
            }
        }
        auto basis = symmetrizer_space(b);
        std::set<BitMatrix> spanned;
        for (uint64_t mask = 0; mask < (uint64_t{1} << basis.size()); mask++) {
            BitMatrix r(m, m);
            for (size_t i = 0; i < basis.size(); i++) {
                if ((mask >> i) & 1) {
                    r += basis[i];
                }
            }
            spanned.insert(r);
        }
        ASSERT_EQ(spanned, brute) << b.to_text();
    }
}

TEST(Construct, TwoQubitSymmetrizersArePolynomials) {
    for (const auto &b : search_B(2, SearchMode::Exhaustive, 0, 0, 1)) {
        // R = [[r0, r1], [r1, r2]]: three unknowns, every solution checked.
        std::set<BitMatrix> solutions;
        for (int bits = 0; bits < 8; bits++) {
            BitMatrix r{{bits & 1, (bits >> 1) & 1}, {(bits >> 1) & 1, (bits >> 2) & 1}};
            if ((b * r).is_symmetric()) {
                solutions.insert(r);
            }
        }
        EXPECT_EQ(solutions, polynomials_in(b));
        EXPECT_EQ(symmetrizer_space(b).size(), 2u);
        EXPECT_FALSE(find_symmetrizer(b, true).has_value());
        EXPECT_TRUE(find_symmetrizer(b, false).has_value());
    }
}

TEST(Construct, IsPolynomialInMatchesEnumeration) {
    for (uint64_t bits = 0; bits < 512; bits += 7) {
        BitMatrix b = matrix_from_bits(3, bits);
        auto polys = polynomials_in(b);
        for (uint64_t xb = 0; xb < 512; xb += 5) {
            BitMatrix x = matrix_from_bits(3, xb);
            ASSERT_EQ(is_polynomial_in(b, x), polys.contains(x)) << b.to_text() << x.to_text();
        }
    }
}

TEST(Construct, FindSymmetrizerPicksAdmissibleElement) {
    SearchOptions opts;
    opts.m = 4;
    opts.kind = SetKind::Group;
    opts.count = 3;
    for (const auto &spec : search_specs(opts).specs) {
        EXPECT_TRUE(spec.r.is_symmetric());
        EXPECT_TRUE(is_invertible(spec.r));
        EXPECT_TRUE((spec.b * spec.r).is_symmetric());
        EXPECT_FALSE(is_polynomial_in(spec.b, spec.r));
    }
}

class ExclusionOracle : public ::testing::TestWithParam<int> {};

TEST_P(ExclusionOracle, ExclusionMatchesEnumeratedSumsAndEntanglement) {
    int m = GetParam();
    SearchOptions opts;
    opts.m = m;
    opts.kind = SetKind::Group;
    opts.count = 2;
    auto specs = search_specs(opts).specs;
    ASSERT_FALSE(specs.empty());
    for (const auto &spec : specs) {
        std::set<BitMatrix> reachable;
        for (const auto &p : polynomials_in(spec.b)) {
            for (uint64_t dbits = 0; dbits < (uint64_t{1} << m); dbits++) {
                BitMatrix d(m, m);
                for (int i = 0; i < m; i++) {
                    d.set(i, i, (dbits >> i) & 1);
                }
                reachable.insert(p * spec.r + d);
            }
        }
        int outside = 0;
        uint64_t n = m * (m + 1) / 2;
        for (uint64_t bits = 0; bits < (uint64_t{1} << n); bits += (m == 4 ? 3 : 1)) {
            BitMatrix a = symmetric_from_bits(m, bits);
            bool excluded = span_excluded(spec.b, spec.r, a);
            ASSERT_EQ(excluded, reachable.contains(a)) << a.to_text();
            if (bits % 17 == 0) {
                auto ev = entanglement_vector(generators(StabilizerSpec::semigroup(spec.b, spec.r, a)));
                EXPECT_EQ(ev.factorizable() == 1, !excluded) << a.to_text();
            }
            outside += !excluded;
        }
        auto a = find_A(spec.b, spec.r);
        EXPECT_EQ(a.has_value(), outside > 0);
        if (a) {
            EXPECT_FALSE(span_excluded(spec.b, spec.r, *a));
        }
    }
}

INSTANTIATE_TEST_SUITE_P(SmallM, ExclusionOracle, ::testing::Values(3, 4));

TEST(Construct, NoFilteredAAtThreeQubits) {
    // span{p(B)R} + diagonals has dimension 2m = 6 = m(m+1)/2 here, so it fills every
    // symmetric matrix. Checked over every (B, R) the group scan produces.
    SearchOptions opts;
    opts.m = 3;
    opts.kind = SetKind::Group;
    auto specs = search_specs(opts).specs;
    ASSERT_FALSE(specs.empty());
    for (const auto &s : specs) {
        EXPECT_FALSE(find_A(s.b, s.r).has_value());
    }
}

TEST(Construct, BitEnumerationOrderIsLexicographic) {
    for (size_t m = 1; m <= 3; m++) {
        uint64_t n = m * (m + 1) / 2;
        for (uint64_t bits = 1; bits < (uint64_t{1} << n); bits++) {
            ASSERT_LT(symmetric_from_bits(m, bits - 1), symmetric_from_bits(m, bits));
            ASSERT_TRUE(symmetric_from_bits(m, bits).is_symmetric());
        }
        for (uint64_t bits = 1; bits < (uint64_t{1} << (m * m)); bits++) {
            ASSERT_LT(matrix_from_bits(m, bits - 1), matrix_from_bits(m, bits));
        }
    }
    EXPECT_EQ(symmetric_from_bits(2, 0b100), (BitMatrix{{1, 0}, {0, 0}}));
}

TEST(Construct, KindNames) {
    for (SetKind k : {SetKind::Field, SetKind::Group, SetKind::Semigroup}) {
        EXPECT_EQ(parse_kind(kind_name(k)), k);
    }
    EXPECT_THROW(parse_kind("ring"), std::invalid_argument);
}

}  // namespace
}  // namespace mubforge
