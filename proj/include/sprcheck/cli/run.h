// Copyright 2026 The sprcheck Authors
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

#ifndef SPRCHECK_CLI_RUN_H
#define SPRCHECK_CLI_RUN_H

#include <iosfwd>
#include <string>
#include <vector>

#include "sprcheck/cli/scenario.h"

namespace sprcheck::cli {

enum ExitCode : int {
    kExitSuccess = 0,
    kExitInputInvalid = 2,
    kExitInfeasibleParameters = 3,
    kExitInternalInconsistency = 4,
};

struct RunOutcome {
    int exit_code = kExitSuccess;
    /// Human-readable summary (or the error message on failure).
    std::string summary;
    /// Files written, relative to nothing (as passed in out_dir).
    std::vector<std::string> files;
};

/// Executes a scenario and writes `<out_dir>/<command>.json`, the
/// command-specific tables, and a `<command>.meta.json` sidecar holding the
/// only non-deterministic fields. Library errors map onto the exit codes;
/// nothing is written on failure.
RunOutcome run(const Scenario &scenario);

/// Command-line front end. Seed precedence: --seed, then SPRCHECK_SEED, then
/// the scenario value.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace sprcheck::cli

#endif
