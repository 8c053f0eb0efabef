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

#ifndef MUBFORGE_CLI_H
#define MUBFORGE_CLI_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace mubforge {

/// Process exit codes.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;

struct SearchArgs {
    int m = 1;
    std::string kind = "field";
    std::optional<uint64_t> count;
    bool exhaustive = false;
    std::optional<uint64_t> seed;
};

/// JSON lines on `out`, warnings on `err`.
int cmd_search(const SearchArgs &args, std::ostream &out, std::ostream &err);

struct BuildArgs {
    std::string spec_path;
    double tol = 1e-10;
    int numeric_cap = 5;
    /// Writes every basis as JSON when non-empty and numerics ran.
    std::string bases_path;
};

/// RunReport as one JSON line. Exit 2 when the spec is rejected or any check fails.
int cmd_build(const BuildArgs &args, std::ostream &out, std::ostream &err);

/// Tab-separated "file kind counts" rows; a failing file gets kind "error" and the message.
int cmd_classify(const std::vector<std::string> &paths, std::ostream &out, std::ostream &err);

/// JSON verdict. Exit 0 only when a map was found.
int cmd_equiv(const std::string &path_a, const std::string &path_b, std::ostream &out, std::ostream &err);

/// argv front end shared by the executable and the tests.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace mubforge

#endif
