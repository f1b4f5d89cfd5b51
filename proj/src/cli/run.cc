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

#include "sprcheck/cli/run.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <locale>
#include <sstream>

#include "CLI11.hpp"
#include "sprcheck/cascade.h"
#include "sprcheck/cli/reports.h"
#include "sprcheck/errors.h"
#include "sprcheck/measurement.h"
#include "sprcheck/numeric_format.h"
#include "sprcheck/optimizer.h"
#include "sprcheck/spr_checker.h"

namespace sprcheck::cli {

using nlohmann::json;

namespace {

constexpr const char *kToolVersion = "0.1.0";
constexpr size_t kMaxSummaryLines = 64;

struct Artifact {
    std::string name;
    std::string contents;
};

struct CommandOutput {
    json result;
    std::vector<Artifact> tables;
    std::string summary;
};

ModeMonomial input_occupation(const Scenario &s, const std::vector<int> &occupation, const std::string &field) {
    if (occupation.empty()) {
        throw InvalidInput("'" + field + "' occupation list is required");
    }
    if (s.mode_count != static_cast<int>(occupation.size())) {
        throw InvalidInput(
            "'" + field + "' lists " + std::to_string(occupation.size()) + " modes but the scenario has " +
            std::to_string(s.mode_count));
    }
    return ModeMonomial(occupation);
}

Scenario with_inferred_modes(Scenario s) {
    if (s.mode_count == 0 && !s.input.empty()) {
        s.mode_count = static_cast<int>(s.input.size());
    }
    if (s.mode_count < 1) {
        throw InvalidInput("mode count is required (--modes)");
    }
    return s;
}

CommandOutput run_expand(const Scenario &scenario) {
    Scenario s = with_inferred_modes(scenario);
    ModeMonomial input = input_occupation(s, s.input, "input");
    InterferometerUnitary u = resolve_unitary(s);
    FockPolynomial out = apply_unitary(FockPolynomial::from_occupation(input), u);

    CommandOutput o;
    o.result["unitary"] = matrix_to_json(u.matrix());
    o.result["output"] = polynomial_report(out, input);
    std::ostringstream summary;
    summary.imbue(std::locale::classic());
    summary << "expanded " << input.to_string() << " through a " << u.dimension() << "-mode interferometer: " << out.size()
            << " nonzero terms\n";
    std::vector<ModeMonomial> listed = enumerate_occupations(u.dimension(), input.degree());
    if (listed.size() > kMaxSummaryLines) {
        listed.clear();
        for (const auto &[monomial, c] : out.terms()) {
            listed.push_back(monomial);
        }
    }
    for (const ModeMonomial &monomial : listed) {
        Complex c = out.coefficient(monomial);
        summary << "  " << monomial.to_string() << "  " << format_shortest(c.real()) << " " << (c.imag() < 0 ? "-" : "+")
                << " " << format_shortest(std::abs(c.imag())) << "i\n";
    }
    o.summary = summary.str();
    return o;
}

CommandOutput run_measure(const Scenario &scenario) {
    Scenario s = with_inferred_modes(scenario);
    DetectorModel det(s.eta);
    ModeMonomial input = input_occupation(s, s.input, "input");
    InterferometerUnitary u = resolve_unitary(s);
    SignatureDistribution dist = signature_distribution(apply_unitary(FockPolynomial::from_occupation(input), u), input, det);

    CommandOutput o;
    o.result["unitary"] = matrix_to_json(u.matrix());
    o.result["distribution"] = distribution_to_json(dist);
    o.tables.push_back({"signatures.csv", distribution_csv(dist)});
    std::ostringstream summary;
    summary.imbue(std::locale::classic());
    summary << "click-pattern distribution for " << input.to_string() << " at eta = " << format_shortest(s.eta) << "\n";
    for (const auto &[pattern, p] : dist) {
        summary << "  " << pattern.to_string() << "  " << format_shortest(p) << "\n";
    }
    if (s.versus) {
        ModeMonomial other = input_occupation(s, *s.versus, "versus");
        SignatureDistribution dist2 =
            signature_distribution(apply_unitary(FockPolynomial::from_occupation(other), u), other, det);
        SignatureClassification c = classify(dist, dist2);
        o.result["versus_distribution"] = distribution_to_json(dist2);
        o.result["classification"] = classification_to_json(c);
        o.tables.push_back({"signatures_versus.csv", distribution_csv(dist2)});
        summary << "classification (input vs versus): " << c.one_photon_set.size() << " input-only, "
                << c.two_photon_set.size() << " versus-only, " << c.failure_set.size() << " ambiguous patterns\n";
    }
    o.summary = summary.str();
    return o;
}

CommandOutput run_check(const Scenario &s) {
    if (s.mode_count < 1 || s.photon_count < 1) {
        throw InvalidInput("check needs --modes and --photons");
    }
    InfeasibilityCertificate cert = run_deduction(s.detector_type, s.mode_count, s.photon_count);
    VerificationResult v = verify_certificate(cert);
    if (!v) {
        throw InconsistencyError(
            "certificate failed verification" + (v.failed_step ? " at step " + std::to_string(*v.failed_step + 1) : "") +
            ": " + v.message);
    }
    BranchCoverage branches = verify_all_branches(s.detector_type, s.mode_count, s.photon_count);
    if (!branches.all_closed) {
        throw InconsistencyError("an alternative branch of the case split did not reach the contradiction");
    }

    CommandOutput o;
    o.result["certificate"] = certificate_to_json(cert);
    o.result["verification"] = {{"ok", v.ok}, {"message", v.message}};
    o.result["branches"] = {{"explored", branches.branches}, {"all_closed", branches.all_closed}};
    o.result["verdict"] = "INFEASIBLE";
    o.tables.push_back({"certificate.txt", certificate_to_text(cert)});
    o.tables.push_back({"certificate.json", certificate_to_json(cert).dump(2) + "\n"});

    std::ostringstream summary;
    summary.imbue(std::locale::classic());
    summary << certificate_to_text(cert) << "\n";
    summary << "verification: " << v.message << "; " << branches.branches << " branch orderings closed\n";
    if (s.samples > 0) {
        FalsificationReport f = brute_force_search(s.detector_type, s.mode_count, s.photon_count, s.samples, s.seed);
        o.result["falsification"] = falsification_to_json(f);
        summary << "brute force: " << f.samples << " unitaries, " << f.feasible_samples
                << " meet the forbidden-click bound, " << f.violations << " violate the theorem\n";
        if (f.violations > 0) {
            throw InconsistencyError("brute-force search found a unitary contradicting the certificate");
        }
    }
    summary << "INFEASIBLE (theorem holds)\n";
    o.summary = summary.str();
    return o;
}

CommandOutput run_optimize(const Scenario &s) {
    if (s.mode_count < 1 || s.photon_count < 1) {
        throw InvalidInput("optimize needs --modes and --photons");
    }
    std::vector<SweepRow> rows =
        epsilon_sweep(s.detector_type, s.mode_count, s.photon_count, s.epsilons, s.restarts, s.seed, s.budget);
    CommandOutput o;
    o.result["sweep"] = sweep_to_json(rows);
    o.tables.push_back({"sweep.csv", sweep_csv(rows)});
    std::ostringstream summary;
    summary.imbue(std::locale::classic());
    summary << "epsilon sweep, type " << to_string(s.detector_type) << ", M = " << s.mode_count << ", N = " << s.photon_count
            << "\n";
    for (const SweepRow &r : rows) {
        summary << "  eps " << format_shortest(r.epsilon) << ": best " << format_shortest(r.best_objective)
                << (r.feasible ? "" : " (no feasible point; least P_forbidden " + format_shortest(r.constraint_residual) + ")")
                << "\n";
    }
    o.summary = summary.str();
    return o;
}

CommandOutput run_cascade(const Scenario &s) {
    if (s.fanout_min < 1 || s.fanout_max < s.fanout_min) {
        throw InvalidInput("fan-out range must satisfy 1 <= D_min <= D_max");
    }
    if (s.fanout_max > 64) {
        throw UnsupportedParameters("cascade analysis is limited to D <= 64");
    }
    DetectorModel det(s.eta);
    std::vector<CascadeReport> rows;
    for (int d = s.fanout_min; d <= s.fanout_max; d++) {
        rows.push_back(cascade_analysis(d, s.cascade_photons, det));
    }
    CommandOutput o;
    o.result["cascade"] = cascade_to_json(rows);
    o.tables.push_back({"cascade.csv", cascade_csv(rows)});
    std::ostringstream summary;
    summary.imbue(std::locale::classic());
    summary << "detector cascade, n = " << s.cascade_photons << ", eta = " << format_shortest(s.eta) << "\n";
    for (const CascadeReport &r : rows) {
        summary << "  D " << r.fanout << ": p_collision " << format_shortest(r.p_collision) << ", p_miscount "
                << format_shortest(r.p_miscount) << "\n";
    }
    if (s.target_collision) {
        int d = required_fanout(*s.target_collision, s.cascade_photons);
        o.result["required_fanout"] = {{"target_collision", *s.target_collision}, {"D", d}};
        summary << "required fan-out for p_collision <= " << format_shortest(*s.target_collision) << ": " << d << "\n";
    }
    o.summary = summary.str();
    return o;
}

void write_file(const std::filesystem::path &path, const std::string &contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw InvalidInput("cannot write '" + path.string() + "'");
    }
    out << contents;
}

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream out;
    out.imbue(std::locale::classic());
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

RunOutcome execute(const Scenario &s) {
    CommandOutput o;
    switch (s.command) {
        case CommandKind::Expand:
            o = run_expand(s);
            break;
        case CommandKind::Measure:
            o = run_measure(s);
            break;
        case CommandKind::Check:
            o = run_check(s);
            break;
        case CommandKind::Optimize:
            o = run_optimize(s);
            break;
        case CommandKind::Cascade:
            o = run_cascade(s);
            break;
    }

    const std::string command = to_string(s.command);
    json doc;
    doc["tool"] = "sprcheck";
    doc["command"] = command;
    doc["scenario"] = scenario_to_json(s);
    doc["result"] = o.result;

    std::filesystem::path dir(s.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw InvalidInput("cannot create output directory '" + s.out_dir + "': " + ec.message());
    }
    RunOutcome outcome;
    outcome.summary = o.summary;
    auto emit = [&](const std::string &name, const std::string &contents) {
        write_file(dir / name, contents);
        outcome.files.push_back((dir / name).string());
    };
    emit(command + ".json", doc.dump(2) + "\n");
    for (const Artifact &a : o.tables) {
        emit(a.name, a.contents);
    }
    json meta{{"tool", "sprcheck"}, {"version", kToolVersion}, {"generated_at", utc_timestamp()}};
    emit(command + ".meta.json", meta.dump(2) + "\n");
    return outcome;
}

std::vector<double> parse_double_list(const std::string &text) {
    std::vector<double> out;
    std::stringstream in(text);
    in.imbue(std::locale::classic());
    std::string item;
    while (std::getline(in, item, ',')) {
        double v = 0;
        auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || end != item.data() + item.size()) {
            throw InvalidInput("cannot parse number '" + item + "'");
        }
        out.push_back(v);
    }
    return out;
}

std::pair<int, int> parse_fanout_range(const std::string &text) {
    auto parse_int = [&](const std::string &t) {
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 6) {
            throw InvalidInput("fan-out must look like D or Dmin:Dmax, got '" + text + "'");
        }
        return std::stoi(t);
    };
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        int d = parse_int(text);
        return {d, d};
    }
    return {parse_int(text.substr(0, colon)), parse_int(text.substr(colon + 1))};
}

UnitarySource load_unitary_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open unitary file '" + path + "'");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        throw InvalidInput(path + ": " + e.what());
    }
    UnitarySource src;
    src.kind = UnitarySource::Kind::Explicit;
    src.matrix = parse_matrix(j.is_object() && j.contains("matrix") ? j["matrix"] : j, path);
    return src;
}

}  // namespace

RunOutcome run(const Scenario &scenario) {
    try {
        return execute(scenario);
    } catch (const InvalidInput &e) {
        return {kExitInputInvalid, std::string("input invalid: ") + e.what(), {}};
    } catch (const UnsupportedParameters &e) {
        return {kExitInfeasibleParameters, std::string("unsupported parameters: ") + e.what(), {}};
    } catch (const InconsistencyError &e) {
        return {kExitInternalInconsistency, std::string("internal inconsistency: ") + e.what(), {}};
    } catch (const std::exception &e) {
        return {kExitInternalInconsistency, std::string("internal error: ") + e.what(), {}};
    }
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Linear-optics photon-number resolution checker"};
    app.require_subcommand(1);

    Scenario s;
    std::uint64_t seed_flag = 0;
    std::vector<CLI::Option *> seed_options;
    std::string unitary_preset;
    std::string unitary_file;
    std::string detector_type = "I";
    std::string epsilons;
    std::string fanout;
    std::vector<int> versus;
    std::string scenario_path;
    std::string out_dir_flag;
    double target_collision = 0;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--modes", s.mode_count, "Number of optical modes M")->check(CLI::PositiveNumber);
        seed_options.push_back(sub->add_option("--seed", seed_flag, "Random seed"));
        sub->add_option("--out-dir", out_dir_flag, "Output directory (default ./out)");
        sub->add_option("--eta", s.eta, "Detector amplitude efficiency (photon trigger probability eta^2)")
            ->check(CLI::Range(0.0, 1.0));
    };
    auto add_unitary = [&](CLI::App *sub) {
        sub->add_option("--input", s.input, "Input occupation per mode, e.g. 1,1")->delimiter(',');
        sub->add_option("--unitary", unitary_preset, "identity | random | balanced-D");
        sub->add_option("--unitary-file", unitary_file, "JSON file with a matrix of [re, im] entries");
    };

    CLI::App *expand = app.add_subcommand("expand", "Expand an input Fock state through an interferometer");
    add_common(expand);
    add_unitary(expand);

    CLI::App *measure = app.add_subcommand("measure", "Click-pattern distribution of an output state");
    add_common(measure);
    add_unitary(measure);
    measure->add_option("--versus", versus, "Second input occupation to classify against")->delimiter(',');

    CLI::App *check = app.add_subcommand("check", "Build and verify the forced-zero infeasibility certificate");
    add_common(check);
    check->add_option("--type", detector_type, "Detector type I or II");
    check->add_option("--photons", s.photon_count, "Photon number N (signal plus auxiliary)")->check(CLI::PositiveNumber);
    check->add_option("--samples", s.samples, "Brute-force falsification samples (0 = skip)");

    CLI::App *optimize = app.add_subcommand("optimize", "Constrained search over interferometers (epsilon sweep)");
    add_common(optimize);
    optimize->add_option("--type", detector_type, "Detector type I or II");
    optimize->add_option("--photons", s.photon_count, "Photon number N")->check(CLI::PositiveNumber);
    optimize->add_option("--epsilons", epsilons, "Comma-separated, strictly decreasing");
    optimize->add_option("--restarts", s.restarts, "Restarts per epsilon")->check(CLI::PositiveNumber);
    optimize->add_option("--budget", s.budget, "Objective evaluations per restart");

    CLI::App *cascade = app.add_subcommand("cascade", "Detector cascade collision statistics");
    add_common(cascade);
    cascade->add_option("--fanout", fanout, "D or Dmin:Dmax (default 1:16)");
    cascade->add_option("--photons", s.cascade_photons, "Photons entering the cascade (1 or 2)");
    auto *target_opt = cascade->add_option("--target-collision", target_collision, "Report the fan-out reaching this p_collision");

    CLI::App *run_sub = app.add_subcommand("run", "Run a JSON scenario file");
    run_sub->add_option("scenario", scenario_path, "Scenario file")->required();
    run_sub->add_option("--out-dir", out_dir_flag, "Output directory override");
    seed_options.push_back(run_sub->add_option("--seed", seed_flag, "Seed override"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitInputInvalid;
    }

    try {
        if (run_sub->parsed()) {
            s = load_scenario(scenario_path);
        } else {
            if (expand->parsed()) {
                s.command = CommandKind::Expand;
            } else if (measure->parsed()) {
                s.command = CommandKind::Measure;
            } else if (check->parsed()) {
                s.command = CommandKind::Check;
            } else if (optimize->parsed()) {
                s.command = CommandKind::Optimize;
            } else {
                s.command = CommandKind::Cascade;
            }
            s.detector_type = parse_detector_type(detector_type);
            if (!unitary_preset.empty() && !unitary_file.empty()) {
                throw InvalidInput("--unitary and --unitary-file are mutually exclusive");
            }
            if (!unitary_preset.empty()) {
                s.unitary = parse_unitary_preset(unitary_preset);
            } else if (!unitary_file.empty()) {
                s.unitary = load_unitary_file(unitary_file);
            }
            if (!versus.empty()) {
                s.versus = versus;
            }
            if (!epsilons.empty()) {
                s.epsilons = parse_double_list(epsilons);
            }
            if (!fanout.empty()) {
                std::tie(s.fanout_min, s.fanout_max) = parse_fanout_range(fanout);
            }
            if (target_opt->count() > 0) {
                s.target_collision = target_collision;
            }
        }
        bool seed_given = std::any_of(seed_options.begin(), seed_options.end(), [](CLI::Option *o) { return o->count() > 0; });
        if (seed_given) {
            s.seed = seed_flag;
        } else if (const char *env = std::getenv("SPRCHECK_SEED"); env != nullptr && *env != '\0') {
            std::string text(env);
            if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 19) {
                throw InvalidInput("SPRCHECK_SEED must be a non-negative integer");
            }
            s.seed = std::stoull(text);
        }
        if (!out_dir_flag.empty()) {
            s.out_dir = out_dir_flag;
        }
    } catch (const InvalidInput &e) {
        err << "input invalid: " << e.what() << "\n";
        return kExitInputInvalid;
    }

    RunOutcome outcome = run(s);
    if (outcome.exit_code != kExitSuccess) {
        err << outcome.summary << "\n";
        return outcome.exit_code;
    }
    out << outcome.summary;
    for (const std::string &f : outcome.files) {
        out << "wrote " << f << "\n";
    }
    return kExitSuccess;
}

}  // namespace sprcheck::cli
