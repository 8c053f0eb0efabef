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

namespace mubforge {

namespace {

BitMatrix optional_block(const Json &j, const char *key, const BitMatrix &forced, bool allowed, size_t m) {
    if (!j.contains(key)) {
        return forced;
    }
    BitMatrix a = matrix_from_json(j.at(key), key);
    if (a.rows() != m || a.cols() != m) {
        throw FormatError(std::string(key) + " must be " + std::to_string(m) + " x " + std::to_string(m));
    }
    if (!allowed && a != forced) {
        throw FormatError(std::string(key) + " conflicts with its forced value for this kind");
    }
    return a;
}

}  // namespace

Json matrix_to_json(const BitMatrix &a) {
    Json rows = Json::array();
    for (const auto &r : a.to_rows()) {
        rows.push_back(r);
    }
    return rows;
}

BitMatrix matrix_from_json(const Json &j, std::string_view what) {
    const std::string name(what);
    if (!j.is_array() || j.empty()) {
        throw FormatError(name + " must be a nonempty array of rows");
    }
    std::vector<std::vector<int>> rows;
    for (const auto &row : j) {
        if (!row.is_array() || row.size() != j.front().size() || row.empty()) {
            throw FormatError(name + " rows must be nonempty arrays of equal length");
        }
        std::vector<int> bits;
        for (const auto &e : row) {
            if (!e.is_number_integer() || (e.get<int64_t>() != 0 && e.get<int64_t>() != 1)) {
                throw FormatError(name + " entries must be 0 or 1");
            }
            bits.push_back(e.get<int>());
        }
        rows.push_back(std::move(bits));
    }
    return BitMatrix::from_rows(rows);
}

Json spec_to_json(const StabilizerSpec &spec) {
    Json j;
    j["m"] = spec.m;
    j["kind"] = std::string(kind_name(spec.kind));
    j["B"] = matrix_to_json(spec.b);
    if (spec.kind != SetKind::Field) {
        j["R"] = matrix_to_json(spec.r);
    }
    if (spec.kind == SetKind::Semigroup) {
        j["A"] = matrix_to_json(spec.a);
    }
    return j;
}

StabilizerSpec spec_from_json(const Json &j) {
    if (!j.is_object()) {
        throw FormatError("spec must be a JSON object");
    }
    for (const char *key : {"m", "kind", "B"}) {
        if (!j.contains(key)) {
            throw FormatError(std::string("spec is missing \"") + key + "\"");
        }
    }
    if (!j.at("m").is_number_integer()) {
        throw FormatError("m must be an integer");
    }
    int64_t m = j.at("m").get<int64_t>();
    if (m < 1 || m > kMaxQubits) {
        throw FormatError("m must be in 1.." + std::to_string(kMaxQubits));
    }
    if (!j.at("kind").is_string()) {
        throw FormatError("kind must be a string");
    }
    SetKind kind;
    try {
        kind = parse_kind(j.at("kind").get<std::string>());
    } catch (const std::invalid_argument &e) {
        throw FormatError(e.what());
    }
    size_t n = static_cast<size_t>(m);
    BitMatrix b = matrix_from_json(j.at("B"), "B");
    if (b.rows() != n || b.cols() != n) {
        throw FormatError("B must be " + std::to_string(n) + " x " + std::to_string(n));
    }
    if (kind != SetKind::Field && !j.contains("R")) {
        throw FormatError("spec of kind " + std::string(kind_name(kind)) + " needs R");
    }
    if (kind == SetKind::Semigroup && !j.contains("A")) {
        throw FormatError("spec of kind semigroup needs A");
    }
    BitMatrix r = optional_block(j, "R", BitMatrix::identity(n), kind != SetKind::Field, n);
    BitMatrix a = optional_block(j, "A", BitMatrix(n, n), kind == SetKind::Semigroup, n);
    switch (kind) {
        case SetKind::Field:
            return StabilizerSpec::field(b);
        case SetKind::Group:
            return StabilizerSpec::group(b, r);
        case SetKind::Semigroup:
            break;
    }
    return StabilizerSpec::semigroup(b, r, a);
}

StabilizerSpec parse_spec(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    return spec_from_json(j);
}

std::string spec_to_line(const StabilizerSpec &spec) {
    return spec_to_json(spec).dump();
}

Json entanglement_to_json(const EntanglementVector &v) {
    Json j;
    j["partitions"] = v.partitions;
    j["counts"] = v.counts;
    return j;
}

Json symplectic_map_to_json(const SymplecticMap &f) {
    Json j;
    j["s"] = matrix_to_json(f.s);
    j["t"] = matrix_to_json(f.t);
    j["u"] = matrix_to_json(f.u);
    j["v"] = matrix_to_json(f.v);
    return j;
}

Json basis_to_json(const ComplexMatrix &u) {
    Json cols = Json::array();
    for (Eigen::Index c = 0; c < u.cols(); c++) {
        Json col = Json::array();
        for (Eigen::Index r = 0; r < u.rows(); r++) {
            col.push_back({u(r, c).real(), u(r, c).imag()});
        }
        cols.push_back(std::move(col));
    }
    return cols;
}

}  // namespace mubforge
