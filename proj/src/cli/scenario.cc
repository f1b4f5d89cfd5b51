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

#include "sprcheck/cli/scenario.h"

#include <fstream>
#include <set>
#include <sstream>

#include "sprcheck/cascade.h"
#include "sprcheck/errors.h"

namespace sprcheck::cli {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string &origin, const std::string &field, const std::string &what) {
    throw InvalidInput(origin + ": field '" + field + "': " + what);
}

int get_int(const json &j, const std::string &origin, const std::string &field, int min_value) {
    if (!j.is_number_integer()) {
        field_error(origin, field, "expected an integer");
    }
    auto v = j.get<long long>();
    if (v < min_value || v > 1'000'000) {
        field_error(origin, field, "value " + std::to_string(v) + " out of range");
    }
    return static_cast<int>(v);
}

std::uint64_t get_u64(const json &j, const std::string &origin, const std::string &field) {
    if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<long long>() < 0)) {
        field_error(origin, field, "expected a non-negative integer");
    }
    return j.get<std::uint64_t>();
}

double get_double(const json &j, const std::string &origin, const std::string &field) {
    if (!j.is_number()) {
        field_error(origin, field, "expected a number");
    }
    return j.get<double>();
}

std::vector<int> get_int_list(const json &j, const std::string &origin, const std::string &field) {
    if (!j.is_array()) {
        field_error(origin, field, "expected an array of integers");
    }
    std::vector<int> out;
    for (size_t i = 0; i < j.size(); i++) {
        out.push_back(get_int(j[i], origin, field + "[" + std::to_string(i) + "]", 0));
    }
    return out;
}

UnitarySource parse_unitary_field(const json &j, const std::string &origin) {
    const std::string field = "unitary";
    if (j.is_string()) {
        try {
            return parse_unitary_preset(j.get<std::string>());
        } catch (const InvalidInput &e) {
            field_error(origin, field, e.what());
        }
    }
    if (!j.is_object() || j.size() != 1) {
        field_error(origin, field, "expected a preset string or an object with one of preset, matrix, random_seed, parametrization");
    }
    const auto &[key, value] = *j.items().begin();
    UnitarySource src;
    if (key == "preset") {
        if (!value.is_string()) {
            field_error(origin, field + ".preset", "expected a string");
        }
        try {
            return parse_unitary_preset(value.get<std::string>());
        } catch (const InvalidInput &e) {
            field_error(origin, field + ".preset", e.what());
        }
    } else if (key == "matrix") {
        src.kind = UnitarySource::Kind::Explicit;
        src.matrix = parse_matrix(value, origin + ": field 'unitary.matrix'");
    } else if (key == "random_seed") {
        src.kind = UnitarySource::Kind::Random;
        src.seed = get_u64(value, origin, field + ".random_seed");
    } else if (key == "parametrization") {
        if (!value.is_object() || !value.contains("angles") || !value.contains("phases")) {
            field_error(origin, field + ".parametrization", "expected {\"angles\": [...], \"phases\": [...]}");
        }
        std::vector<double> angles;
        std::vector<double> phases;
        for (const auto &a : value["angles"]) {
            angles.push_back(get_double(a, origin, field + ".parametrization.angles"));
        }
        for (const auto &p : value["phases"]) {
            phases.push_back(get_double(p, origin, field + ".parametrization.phases"));
        }
        // angles = M(M-1)/2 determines M.
        int m = 1;
        while (static_cast<size_t>(m * (m - 1) / 2) < angles.size()) {
            m++;
        }
        try {
            src.kind = UnitarySource::Kind::Parametrized;
            src.params = UnitaryParametrization(m, std::move(angles), std::move(phases));
        } catch (const InvalidInput &e) {
            field_error(origin, field + ".parametrization", e.what());
        }
    } else {
        field_error(origin, field, "unknown unitary source '" + key + "'");
    }
    return src;
}

std::string kind_name(UnitarySource::Kind kind) {
    switch (kind) {
        case UnitarySource::Kind::Identity:
            return "identity";
        case UnitarySource::Kind::Explicit:
            return "matrix";
        case UnitarySource::Kind::Parametrized:
            return "parametrization";
        case UnitarySource::Kind::Balanced:
            return "balanced";
        case UnitarySource::Kind::Random:
            return "random";
    }
    return "unknown";
}

}  // namespace

std::string to_string(CommandKind kind) {
    switch (kind) {
        case CommandKind::Expand:
            return "expand";
        case CommandKind::Measure:
            return "measure";
        case CommandKind::Check:
            return "check";
        case CommandKind::Optimize:
            return "optimize";
        case CommandKind::Cascade:
            return "cascade";
    }
    return "unknown";
}

CommandKind parse_command(const std::string &text) {
    for (CommandKind k :
         {CommandKind::Expand, CommandKind::Measure, CommandKind::Check, CommandKind::Optimize, CommandKind::Cascade}) {
        if (to_string(k) == text) {
            return k;
        }
    }
    throw InvalidInput("unknown command '" + text + "'");
}

UnitarySource parse_unitary_preset(const std::string &text) {
    UnitarySource src;
    if (text == "identity") {
        src.kind = UnitarySource::Kind::Identity;
    } else if (text == "random") {
        src.kind = UnitarySource::Kind::Random;
    } else if (text.rfind("balanced-", 0) == 0) {
        src.kind = UnitarySource::Kind::Balanced;
        const std::string digits = text.substr(9);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 4) {
            throw InvalidInput("balanced preset must look like balanced-D, got '" + text + "'");
        }
        src.fanout = std::stoi(digits);
        if (src.fanout < 1) {
            throw InvalidInput("balanced preset needs D >= 1");
        }
    } else {
        throw InvalidInput("unknown unitary preset '" + text + "' (identity, random, balanced-D)");
    }
    return src;
}

ComplexMatrix parse_matrix(const json &j, const std::string &field) {
    if (!j.is_array() || j.empty()) {
        throw InvalidInput(field + ": expected a non-empty array of rows");
    }
    const auto rows = static_cast<Eigen::Index>(j.size());
    ComplexMatrix m(rows, rows);
    for (Eigen::Index r = 0; r < rows; r++) {
        const json &row = j[static_cast<size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != rows) {
            throw InvalidInput(field + ": row " + std::to_string(r) + " must have " + std::to_string(rows) + " entries");
        }
        for (Eigen::Index c = 0; c < rows; c++) {
            const json &v = row[static_cast<size_t>(c)];
            if (v.is_number()) {
                m(r, c) = Complex(v.get<double>(), 0.0);
            } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
                m(r, c) = Complex(v[0].get<double>(), v[1].get<double>());
            } else {
                throw InvalidInput(
                    field + ": entry (" + std::to_string(r) + "," + std::to_string(c) + ") must be [re, im]");
            }
        }
    }
    return m;
}

Scenario parse_scenario(const std::string &text, const std::string &origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        // nlohmann's message carries "line L, column C".
        throw InvalidInput(origin + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw InvalidInput(origin + ": top level must be a JSON object");
    }
    static const std::set<std::string> known = {
        "command",  "modes",    "seed",   "out_dir",  "eta",     "input",       "versus",          "unitary",
        "type",     "photons",  "samples", "epsilons", "restarts", "budget",     "fanout",          "cascade_photons",
        "target_collision"};
    for (const auto &[key, value] : doc.items()) {
        if (!known.contains(key)) {
            field_error(origin, key, "unknown field");
        }
    }
    if (!doc.contains("command") || !doc["command"].is_string()) {
        field_error(origin, "command", "required string (expand, measure, check, optimize, cascade)");
    }

    Scenario s;
    try {
        s.command = parse_command(doc["command"].get<std::string>());
    } catch (const InvalidInput &e) {
        field_error(origin, "command", e.what());
    }
    if (doc.contains("modes")) {
        s.mode_count = get_int(doc["modes"], origin, "modes", 1);
    }
    if (doc.contains("seed")) {
        s.seed = get_u64(doc["seed"], origin, "seed");
    }
    if (doc.contains("out_dir")) {
        if (!doc["out_dir"].is_string()) {
            field_error(origin, "out_dir", "expected a string");
        }
        s.out_dir = doc["out_dir"].get<std::string>();
    }
    if (doc.contains("eta")) {
        s.eta = get_double(doc["eta"], origin, "eta");
        if (!(s.eta >= 0 && s.eta <= 1)) {
            field_error(origin, "eta", "must lie in [0, 1]");
        }
    }
    if (doc.contains("input")) {
        s.input = get_int_list(doc["input"], origin, "input");
    }
    if (doc.contains("versus")) {
        s.versus = get_int_list(doc["versus"], origin, "versus");
    }
    if (doc.contains("unitary")) {
        s.unitary = parse_unitary_field(doc["unitary"], origin);
    }
    if (doc.contains("type")) {
        if (!doc["type"].is_string()) {
            field_error(origin, "type", "expected \"I\" or \"II\"");
        }
        try {
            s.detector_type = parse_detector_type(doc["type"].get<std::string>());
        } catch (const InvalidInput &e) {
            field_error(origin, "type", e.what());
        }
    }
    if (doc.contains("photons")) {
        s.photon_count = get_int(doc["photons"], origin, "photons", 1);
    }
    if (doc.contains("samples")) {
        s.samples = get_u64(doc["samples"], origin, "samples");
    }
    if (doc.contains("epsilons")) {
        const json &eps = doc["epsilons"];
        if (!eps.is_array() || eps.empty()) {
            field_error(origin, "epsilons", "expected a non-empty array of numbers");
        }
        s.epsilons.clear();
        for (size_t i = 0; i < eps.size(); i++) {
            s.epsilons.push_back(get_double(eps[i], origin, "epsilons[" + std::to_string(i) + "]"));
        }
    }
    if (doc.contains("restarts")) {
        s.restarts = get_int(doc["restarts"], origin, "restarts", 1);
    }
    if (doc.contains("budget")) {
        s.budget = get_u64(doc["budget"], origin, "budget");
    }
    if (doc.contains("fanout")) {
        const json &f = doc["fanout"];
        if (f.is_number_integer()) {
            s.fanout_min = s.fanout_max = get_int(f, origin, "fanout", 1);
        } else if (f.is_array() && f.size() == 2) {
            s.fanout_min = get_int(f[0], origin, "fanout[0]", 1);
            s.fanout_max = get_int(f[1], origin, "fanout[1]", 1);
        } else {
            field_error(origin, "fanout", "expected D or [D_min, D_max]");
        }
    }
    if (doc.contains("cascade_photons")) {
        s.cascade_photons = get_int(doc["cascade_photons"], origin, "cascade_photons", 1);
    }
    if (doc.contains("target_collision")) {
        s.target_collision = get_double(doc["target_collision"], origin, "target_collision");
    }
    return s;
}

Scenario load_scenario(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open scenario file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), path);
}

json scenario_to_json(const Scenario &s) {
    json j;
    j["command"] = to_string(s.command);
    j["seed"] = s.seed;
    switch (s.command) {
        case CommandKind::Expand:
        case CommandKind::Measure: {
            j["modes"] = s.mode_count;
            j["input"] = s.input;
            if (s.versus) {
                j["versus"] = *s.versus;
            }
            j["eta"] = s.eta;
            json u;
            u["kind"] = kind_name(s.unitary.kind);
            if (s.unitary.kind == UnitarySource::Kind::Balanced) {
                u["fanout"] = s.unitary.fanout;
            }
            if (s.unitary.seed) {
                u["seed"] = *s.unitary.seed;
            }
            j["unitary"] = u;
            break;
        }
        case CommandKind::Check:
            j["modes"] = s.mode_count;
            j["type"] = sprcheck::to_string(s.detector_type);
            j["photons"] = s.photon_count;
            j["samples"] = s.samples;
            break;
        case CommandKind::Optimize:
            j["modes"] = s.mode_count;
            j["type"] = sprcheck::to_string(s.detector_type);
            j["photons"] = s.photon_count;
            j["epsilons"] = s.epsilons;
            j["restarts"] = s.restarts;
            j["budget"] = s.budget;
            break;
        case CommandKind::Cascade:
            j["fanout"] = {s.fanout_min, s.fanout_max};
            j["cascade_photons"] = s.cascade_photons;
            j["eta"] = s.eta;
            if (s.target_collision) {
                j["target_collision"] = *s.target_collision;
            }
            break;
    }
    return j;
}

InterferometerUnitary resolve_unitary(const Scenario &s) {
    const int m = s.mode_count;
    const UnitarySource &src = s.unitary;
    auto check_dim = [m](int d) {
        if (d != m) {
            throw InvalidInput(
                "unitary has dimension " + std::to_string(d) + " but the scenario has " + std::to_string(m) + " modes");
        }
    };
    switch (src.kind) {
        case UnitarySource::Kind::Identity:
            return InterferometerUnitary::identity(m);
        case UnitarySource::Kind::Explicit: {
            check_dim(static_cast<int>(src.matrix.rows()));
            return InterferometerUnitary(src.matrix);
        }
        case UnitarySource::Kind::Parametrized:
            check_dim(src.params->mode_count());
            return materialize(*src.params);
        case UnitarySource::Kind::Balanced:
            check_dim(src.fanout);
            return balanced_multiport(src.fanout);
        case UnitarySource::Kind::Random: {
            auto rng = stream_for(src.seed.value_or(s.seed), 0);
            return random_unitary(m, rng);
        }
    }
    throw InvalidInput("unknown unitary source");
}

}  // namespace sprcheck::cli
