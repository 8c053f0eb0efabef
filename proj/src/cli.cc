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

#include "mubforge/cli.h"

#include <chrono>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "mubforge/construct.h"
#include "mubforge/entangle.h"
#include "mubforge/equiv.h"
#include "mubforge/json_io.h"
#include "mubforge/pauli_oracle.h"
#include "mubforge/search.h"

namespace mubforge {

namespace {

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

StabilizerSpec load_spec(const std::string &path) {
    return parse_spec(read_file(path));
}

std::string counts_cell(const EntanglementVector &v) {
    std::string s = "(";
    for (size_t i = 0; i < v.counts.size(); i++) {
        s += (i ? "," : "") + std::to_string(v.counts[i]);
    }
    return s + ")";
}

class Stopwatch {
   public:
    double lap() {
        auto now = std::chrono::steady_clock::now();
        double s = std::chrono::duration<double>(now - start_).count();
        start_ = now;
        return s;
    }

   private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

int cmd_search(const SearchArgs &args, std::ostream &out, std::ostream &err) {
    if (args.m < 1 || args.m > kMaxQubits) {
        err << "error: --m must be in 1.." << kMaxQubits << "\n";
        return kExitUsage;
    }
    SearchOptions opts;
    opts.m = args.m;
    try {
        opts.kind = parse_kind(args.kind);
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (args.exhaustive || (!args.seed && args.m <= 6)) {
        opts.mode = SearchMode::Exhaustive;
        int cap = opts.kind == SetKind::Field ? kMaxExhaustiveFieldQubits : kMaxExhaustiveGeneralQubits;
        if (args.m > cap) {
            err << "error: exhaustive " << args.kind << " search supports m <= " << cap << "; pass --seed\n";
            return kExitUsage;
        }
    } else if (args.seed) {
        opts.mode = SearchMode::Random;
        opts.seed = *args.seed;
    } else {
        err << "error: m > 6 needs --seed (random search) or --exhaustive\n";
        return kExitUsage;
    }
    bool unlimited_default = opts.kind == SetKind::Field && opts.mode == SearchMode::Exhaustive;
    opts.count = args.count ? *args.count : (unlimited_default ? 0 : 1);
    SearchResult result = search_specs(opts);
    for (const auto &spec : result.specs) {
        out << spec_to_line(spec) << "\n";
    }
    out.flush();
    for (const auto &w : result.warnings) {
        err << "warning: " << w << "\n";
    }
    return kExitOk;
}

int cmd_build(const BuildArgs &args, std::ostream &out, std::ostream &err) {
    StabilizerSpec spec;
    try {
        spec = load_spec(args.spec_path);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const FormatError &e) {
        err << "error: " << args.spec_path << ": " << e.what() << "\n";
        return kExitInvalid;
    }
    Json report;
    report["spec"] = spec_to_json(spec);
    auto violations = spec_violations(spec);
    if (!violations.empty()) {
        report["violations"] = violations;
        out << report.dump() << "\n";
        for (const auto &v : violations) {
            err << "error: " << v << "\n";
        }
        return kExitInvalid;
    }

    Json timings;
    Stopwatch clock;
    BitMatrix c = build_stabilizer(spec);
    timings["build"] = clock.lap();
    bool symplectic_ok = preserves_symplectic_form(c);
    bool cyclic_ok = cyclicity_check(c, spec.dimension());
    timings["cyclicity"] = clock.lap();
    GeneratorSet gens = generators(spec);
    timings["generators"] = clock.lap();
    bool classes_ok = class_partition_ok(gens);
    timings["class_checks"] = clock.lap();
    EntanglementVector ev = entanglement_vector(gens);
    timings["entanglement"] = clock.lap();

    report["symplectic_ok"] = symplectic_ok;
    report["cyclic_ok"] = cyclic_ok;
    report["bandyopadhyay_ok"] = classes_ok;
    report["entanglement"] = entanglement_to_json(ev);
    bool ok = symplectic_ok && cyclic_ok && classes_ok;
    if (spec.m <= args.numeric_cap && spec.m <= kMaxNumericQubits) {
        MubSet set = mub_set(gens);
        MubCheck check = verify_mub(set, args.tol);
        timings["mub_verification"] = clock.lap();
        report["mub_max_deviation"] = check.max_deviation;
        report["mub_ok"] = check.pass;
        ok = ok && check.pass;
        if (!args.bases_path.empty()) {
            std::ofstream bases(args.bases_path);
            Json all = Json::array();
            for (const auto &u : set.bases) {
                all.push_back(basis_to_json(u));
            }
            bases << all.dump() << "\n";
            if (!bases) {
                err << "error: cannot write " << args.bases_path << "\n";
                return kExitUsage;
            }
        }
    } else {
        report["mub_verification"] = "skipped";
    }
    report["timings"] = timings;
    out << report.dump() << "\n";
    return ok ? kExitOk : kExitInvalid;
}

int cmd_classify(const std::vector<std::string> &paths, std::ostream &out, std::ostream &err) {
    int status = kExitOk;
    out << "file\tkind\tcounts\n";
    for (const auto &path : paths) {
        try {
            StabilizerSpec spec = load_spec(path);
            check_spec(spec);
            EntanglementVector ev = entanglement_vector(generators(spec));
            out << path << "\t" << kind_name(spec.kind) << "\t" << counts_cell(ev) << "\n";
        } catch (const std::exception &e) {
            out << path << "\terror\t" << e.what() << "\n";
            err << "error: " << path << ": " << e.what() << "\n";
            status = kExitInvalid;
        }
    }
    return status;
}

int cmd_equiv(const std::string &path_a, const std::string &path_b, std::ostream &out, std::ostream &err) {
    StabilizerSpec a, b;
    try {
        a = load_spec(path_a);
        b = load_spec(path_b);
        check_spec(a);
        check_spec(b);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    if (a.m != b.m) {
        err << "error: dimension mismatch, m = " << a.m << " vs " << b.m << "\n";
        return kExitInvalid;
    }
    EquivVerdict verdict = equivalence(a, b);
    Json j;
    j["verdict"] = std::string(status_name(verdict.status));
    j["detail"] = verdict.detail;
    if (verdict.map) {
        j["map"] = symplectic_map_to_json(*verdict.map);
        j["symplectic"] = is_symplectic(*verdict.map);
    }
    out << j.dump() << "\n";
    return verdict.status == EquivStatus::Equivalent ? kExitOk : kExitInvalid;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Cyclic mutually unbiased bases from GF(2) stabilizer matrices"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("--out", out_path, "Write the command output to this file");

    SearchArgs search;
    uint64_t count = 0, seed = 0;
    auto *search_cmd = app.add_subcommand("search", "Find valid specs, one JSON object per line");
    search_cmd->add_option("--m", search.m, "Number of qubits")->required()->check(CLI::Range(1, kMaxQubits));
    search_cmd->add_option("--kind", search.kind, "field | group | semigroup")
        ->check(CLI::IsMember({"field", "group", "semigroup"}));
    auto *count_opt = search_cmd->add_option("--count", count, "Maximum number of specs (0 = unlimited)");
    search_cmd->add_flag("--exhaustive", search.exhaustive, "Scan every candidate in order");
    auto *seed_opt = search_cmd->add_option("--seed", seed, "Random search seed");

    BuildArgs build;
    auto *build_cmd = app.add_subcommand("build", "Run the full pipeline on one spec");
    build_cmd->add_option("spec", build.spec_path, "Spec JSON file")->required();
    build_cmd->add_option("--tol", build.tol, "Numeric unbiasedness tolerance")->check(CLI::PositiveNumber);
    build_cmd->add_option("--numeric-cap", build.numeric_cap, "Largest m for numeric verification")
        ->check(CLI::Range(0, kMaxNumericQubits));
    build_cmd->add_option("--export-bases", build.bases_path, "Write the bases as JSON");

    std::vector<std::string> classify_paths;
    auto *classify_cmd = app.add_subcommand("classify", "Entanglement vector per spec");
    classify_cmd->add_option("specs", classify_paths, "Spec JSON files")->required();

    std::string equiv_a, equiv_b;
    auto *equiv_cmd = app.add_subcommand("equiv", "Look for a symplectic map between two specs");
    equiv_cmd->add_option("spec_a", equiv_a, "First spec")->required();
    equiv_cmd->add_option("spec_b", equiv_b, "Second spec")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    std::ofstream file;
    std::ostream *sink = &out;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            err << "error: cannot write " << out_path << "\n";
            return kExitUsage;
        }
        sink = &file;
    }
    try {
        if (*search_cmd) {
            if (*count_opt) {
                search.count = count;
            }
            if (*seed_opt) {
                search.seed = seed;
            }
            return cmd_search(search, *sink, err);
        }
        if (*build_cmd) {
            return cmd_build(build, *sink, err);
        }
        if (*classify_cmd) {
            return cmd_classify(classify_paths, *sink, err);
        }
        return cmd_equiv(equiv_a, equiv_b, *sink, err);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}

}  // namespace mubforge
