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

#ifndef SPRCHECK_CLI_SCENARIO_H
#define SPRCHECK_CLI_SCENARIO_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sprcheck/discrimination.h"
#include "sprcheck/parametrization.h"
#include "sprcheck/unitary.h"

namespace sprcheck::cli {

enum class CommandKind { Expand, Measure, Check, Optimize, Cascade };

std::string to_string(CommandKind kind);
CommandKind parse_command(const std::string &text);

struct UnitarySource {
    enum class Kind { Identity, Explicit, Parametrized, Balanced, Random };

    Kind kind = Kind::Identity;
    ComplexMatrix matrix;
    std::optional<UnitaryParametrization> params;
    int fanout = 0;
    /// Random unitaries use this when set, otherwise the scenario seed.
    std::optional<std::uint64_t> seed;
};

/// "identity", "random", "balanced-D".
UnitarySource parse_unitary_preset(const std::string &text);

/// Everything one invocation needs. Fields irrelevant to `command` are ignored.
struct Scenario {
    CommandKind command = CommandKind::Expand;
    int mode_count = 0;
    std::uint64_t seed = 0;
    std::string out_dir = "out";
    double eta = 1.0;

    // expand, measure
    std::vector<int> input;
    std::optional<std::vector<int>> versus;
    UnitarySource unitary;

    // check, optimize
    DetectorType detector_type = DetectorType::TypeI;
    int photon_count = 0;
    std::uint64_t samples = 0;
    std::vector<double> epsilons{1.0, 1e-1, 1e-2, 1e-3, 1e-4};
    int restarts = 20;
    std::uint64_t budget = 20000;

    // cascade
    int fanout_min = 1;
    int fanout_max = 16;
    int cascade_photons = 2;
    std::optional<double> target_collision;
};

/// Parses a JSON scenario document. Throws InvalidInput naming the line and
/// column of a syntax error or the offending field.
Scenario parse_scenario(const std::string &text, const std::string &origin = "scenario");
Scenario load_scenario(const std::string &path);

/// Canonical echo of the scenario, embedded in result documents.
nlohmann::json scenario_to_json(const Scenario &scenario);

/// Materializes the unitary source. Explicit matrices are checked for
/// unitarity (InvalidInput otherwise); the dimension must equal `mode_count`.
InterferometerUnitary resolve_unitary(const Scenario &scenario);

/// Parses an explicit matrix: rows of [re, im] pairs (or plain reals).
ComplexMatrix parse_matrix(const nlohmann::json &j, const std::string &field);

}  // namespace sprcheck::cli

#endif
