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

#ifndef MUBFORGE_JSON_IO_H
#define MUBFORGE_JSON_IO_H

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "mubforge/construct.h"
#include "mubforge/entangle.h"
#include "mubforge/equiv.h"
#include "mubforge/pauli_oracle.h"

namespace mubforge {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent JSON input.
class FormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// [[0,1],[1,1]] rows of 0/1 integers.
Json matrix_to_json(const BitMatrix &a);
BitMatrix matrix_from_json(const Json &j, std::string_view what);

/// {"m", "kind", "B", "R", "A"}; R is omitted for field, A for field and group.
Json spec_to_json(const StabilizerSpec &spec);
/// Inverse of spec_to_json. Omitted R/A take their forced values; a present but
/// conflicting R/A is a FormatError. Does not run check_spec.
StabilizerSpec spec_from_json(const Json &j);
StabilizerSpec parse_spec(std::string_view text);
/// One compact line, no trailing newline.
std::string spec_to_line(const StabilizerSpec &spec);

/// {"partitions": [[1,1],[2]], "counts": [3,2]}.
Json entanglement_to_json(const EntanglementVector &v);

Json symplectic_map_to_json(const SymplecticMap &f);

/// One entry per column, each a list of [re, im] pairs. Doubles print with 17 significant
/// digits so the values round-trip.
Json basis_to_json(const ComplexMatrix &u);

}  // namespace mubforge

#endif
