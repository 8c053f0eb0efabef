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

#include "mubforge/json_io.h"

#include <gtest/gtest.h>

#include "mubforge/search.h"

namespace mubforge {
namespace {

TEST(JsonIo, FieldSpecLine) {
    StabilizerSpec s = StabilizerSpec::field(BitMatrix{{0, 1}, {1, 1}});
    EXPECT_EQ(spec_to_line(s), R"({"m":2,"kind":"field","B":[[0,1],[1,1]]})");
    EXPECT_EQ(parse_spec(spec_to_line(s)), s);
}

TEST(JsonIo, RoundTripIsBitExact) {
    for (SetKind kind : {SetKind::Field, SetKind::Group, SetKind::Semigroup}) {
        SearchOptions opts;
        opts.m = 4;
        opts.kind = kind;
        opts.count = 3;
        for (const auto &s : search_specs(opts).specs) {
            std::string line = spec_to_line(s);
            StabilizerSpec back = parse_spec(line);
            EXPECT_EQ(back, s);
            EXPECT_EQ(spec_to_line(back), line);
            Json j = Json::parse(line);
            EXPECT_EQ(j.contains("R"), kind != SetKind::Field);
            EXPECT_EQ(j.contains("A"), kind == SetKind::Semigroup);
        }
    }
}

TEST(JsonIo, ForcedBlocksMayBeSpelledOut) {
    StabilizerSpec s = parse_spec(R"({"m":1,"kind":"field","B":[[1]],"R":[[1]],"A":[[0]]})");
    EXPECT_EQ(s, StabilizerSpec::field(BitMatrix{{1}}));
    EXPECT_THROW(parse_spec(R"({"m":1,"kind":"field","B":[[1]],"A":[[1]]})"), FormatError);
    EXPECT_THROW(parse_spec(R"({"m":2,"kind":"group","B":[[0,1],[1,1]],"R":[[1,0],[0,1]],"A":[[0,1],[1,0]]})"),
                 FormatError);
}

TEST(JsonIo, MalformedInputs) {
    const char *bad[] = {
        "not json",
        "[]",
        R"({"kind":"field","B":[[1]]})",
        R"({"m":1,"B":[[1]]})",
        R"({"m":1,"kind":"ring","B":[[1]]})",
        R"({"m":2,"kind":"field","B":[[1]]})",
        R"({"m":1,"kind":"field","B":[[2]]})",
        R"({"m":2,"kind":"field","B":[[1,0],[1]]})",
        R"({"m":0,"kind":"field","B":[[1]]})",
        R"({"m":2,"kind":"group","B":[[0,1],[1,1]]})",
        R"({"m":2,"kind":"semigroup","B":[[0,1],[1,1]],"R":[[1,0],[0,1]]})",
        R"({"m":"1","kind":"field","B":[[1]]})",
    };
    for (const char *text : bad) {
        EXPECT_THROW(parse_spec(text), FormatError) << text;
    }
}

TEST(JsonIo, EntanglementLayout) {
    EntanglementVector v{3, canonical_partitions(3), {3, 4, 2}};
    EXPECT_EQ(entanglement_to_json(v).dump(), R"({"partitions":[[1,1,1],[2,1],[3]],"counts":[3,4,2]})");
}

TEST(JsonIo, BasisValuesRoundTrip) {
    ComplexMatrix u(2, 2);
    u << Complex(1 / std::sqrt(2.0), 0), Complex(0, 1 / 3.0), Complex(-0.1, 1e-17), Complex(2.0 / 7.0, -1);
    Json j = Json::parse(basis_to_json(u).dump());
    ASSERT_EQ(j.size(), 2u);
    for (Eigen::Index c = 0; c < 2; c++) {
        for (Eigen::Index r = 0; r < 2; r++) {
            EXPECT_EQ(j[c][r][0].get<double>(), u(r, c).real());
            EXPECT_EQ(j[c][r][1].get<double>(), u(r, c).imag());
        }
    }
}

TEST(JsonIo, SymplecticMapLayout) {
    Json j = symplectic_map_to_json(SymplecticMap::identity(1));
    EXPECT_EQ(j.dump(), R"({"s":[[1]],"t":[[0]],"u":[[0]],"v":[[1]]})");
}

}  // namespace
}  // namespace mubforge
