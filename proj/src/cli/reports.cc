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

#include "sprcheck/cli/reports.h"

#include <locale>
#include <sstream>

#include "sprcheck/numeric_format.h"

namespace sprcheck::cli {

using nlohmann::json;

namespace {

constexpr size_t kMaxListedOccupations = 20000;

}  // namespace

json complex_to_json(Complex c) {
    return json::array({c.real(), c.imag()});
}

json matrix_to_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            row.push_back(complex_to_json(m(r, c)));
        }
        rows.push_back(row);
    }
    return rows;
}

json element_to_json(MatrixElement e) {
    return json::array({e.row + 1, e.col + 1});
}

json polynomial_report(const FockPolynomial &poly, const ModeMonomial &input_occupation) {
    json j;
    j["mode_count"] = poly.mode_count();
    j["photon_count"] = input_occupation.degree();
    json terms = json::array();
    for (const auto &[monomial, c] : poly.terms()) {
        terms.push_back({{"monomial", monomial.exponents()}, {"coefficient", complex_to_json(c)}});
    }
    j["terms"] = terms;
    j["norm_squared"] = state_norm_squared(poly);

    std::vector<ModeMonomial> basis = enumerate_occupations(poly.mode_count(), input_occupation.degree());
    if (basis.size() <= kMaxListedOccupations) {
        json amps = json::array();
        for (const ModeMonomial &occ : basis) {
            Complex a = amplitude(poly, occ, input_occupation);
            amps.push_back({
                {"occupation", occ.exponents()},
                {"coefficient", complex_to_json(poly.coefficient(occ))},
                {"amplitude", complex_to_json(a)},
                {"probability", std::norm(a)},
            });
        }
        j["occupations"] = amps;
    }
    return j;
}

json distribution_to_json(const SignatureDistribution &dist) {
    json rows = json::array();
    double total = 0;
    for (const auto &[pattern, p] : dist) {
        rows.push_back({{"pattern", pattern.to_string()}, {"probability", p}});
        total += p;
    }
    return {{"patterns", rows}, {"total_probability", total}};
}

json classification_to_json(const SignatureClassification &c) {
    auto names = [](const std::set<ClickPattern> &s) {
        json a = json::array();
        for (const auto &p : s) {
            a.push_back(p.to_string());
        }
        return a;
    };
    return {
        {"one_photon_set", names(c.one_photon_set)},
        {"two_photon_set", names(c.two_photon_set)},
        {"failure_set", names(c.failure_set)},
    };
}

std::string distribution_csv(const SignatureDistribution &dist) {
    std::ostringstream out;
    out.imbue(std::locale::classic());
    out << "pattern,probability\n";
    for (const auto &[pattern, p] : dist) {
        out << pattern.to_string() << ',' << format_double(p) << '\n';
    }
    return out.str();
}

json certificate_to_json(const InfeasibilityCertificate &cert) {
    json steps = json::array();
    for (const DeductionStep &s : cert.steps) {
        json factors = json::array();
        for (const auto &[e, power] : s.surviving_term.factors()) {
            factors.push_back({{"element", element_to_json(e)}, {"power", power}});
        }
        json alternatives = json::array();
        for (const auto &e : s.alternatives) {
            alternatives.push_back(element_to_json(e));
        }
        json pruned = json::array();
        for (const auto &e : s.pruned) {
            pruned.push_back(element_to_json(e));
        }
        steps.push_back({
            {"power", s.power},
            {"witness", s.witness.exponents()},
            {"surviving_term", factors},
            {"surviving_term_text", s.surviving_term.to_string()},
            {"multiplicity", s.multiplicity},
            {"forced_zero", element_to_json(s.forced_zero)},
            {"alternatives", alternatives},
            {"pruned", pruned},
        });
    }
    json zeros = json::array();
    for (const auto &e : cert.forced_zeros) {
        zeros.push_back(element_to_json(e));
    }
    return {
        {"detector_type", to_string(cert.detector_type)},
        {"mode_count", cert.mode_count},
        {"photon_count", cert.photon_count},
        {"steps", steps},
        {"forced_zeros", zeros},
        {"conclusion", cert.conclusion},
    };
}

std::string certificate_to_text(const InfeasibilityCertificate &cert) {
    std::ostringstream out;
    out.imbue(std::locale::classic());
    out << "Infeasibility certificate: type " << to_string(cert.detector_type) << " detector on output mode 1\n";
    out << "modes M = " << cert.mode_count << ", photons N = " << cert.photon_count
        << " (one auxiliary photon in each of modes 2.." << cert.photon_count << ")\n";
    out << "matrix elements aRC substitute input mode R into output mode C\n\n";
    for (size_t i = 0; i < cert.steps.size(); i++) {
        const DeductionStep &s = cert.steps[i];
        out << "step " << (i + 1) << ": class b1^" << s.power << ", witness " << s.witness.to_string() << "\n";
        out << "  surviving term: " << (s.multiplicity != 1 ? std::to_string(s.multiplicity) + " " : "")
            << s.surviving_term.to_string() << " = 0\n";
        out << "  forced zero: " << s.forced_zero.to_string() << "\n";
        if (!s.alternatives.empty()) {
            out << "  other branches:";
            for (const auto &e : s.alternatives) {
                out << ' ' << e.to_string();
            }
            out << "\n";
        }
        if (!s.pruned.empty()) {
            out << "  pruned (would empty rows already zero in column 1):";
            for (const auto &e : s.pruned) {
                out << ' ' << e.to_string();
            }
            out << "\n";
        }
    }
    out << "\nconclusion: " << cert.conclusion << "\n";
    return out.str();
}

json falsification_to_json(const FalsificationReport &r) {
    auto sample_json = [](const FalsificationSample &s) {
        return json{
            {"index", s.index},
            {"p_forbidden", s.p_forbidden},
            {"p_target", s.p_target},
            {"unitary", matrix_to_json(s.unitary)},
        };
    };
    json j{
        {"detector_type", to_string(r.detector_type)},
        {"mode_count", r.mode_count},
        {"photon_count", r.photon_count},
        {"auxiliary", r.auxiliary},
        {"samples", r.samples},
        {"seed", r.seed},
        {"tolerance", r.tolerance},
        {"feasible_samples", r.feasible_samples},
        {"violations", r.violations},
        {"closest_to_feasible", sample_json(r.closest_to_feasible)},
    };
    j["best_violation"] = r.best_violation ? sample_json(*r.best_violation) : json(nullptr);
    return j;
}

json params_to_json(const UnitaryParametrization &p) {
    return {{"mode_count", p.mode_count()}, {"angles", p.angles()}, {"phases", p.phases()}};
}

json sweep_to_json(const std::vector<SweepRow> &rows) {
    json out = json::array();
    for (const SweepRow &r : rows) {
        out.push_back({
            {"epsilon", r.epsilon},
            {"best_objective", r.best_objective},
            {"constraint_residual", r.constraint_residual},
            {"feasible", r.feasible},
            {"evaluations", r.result.evaluations},
            {"best_restart", r.result.best_restart},
            {"p_target_at_point", r.result.objective},
            {"best_params", params_to_json(r.result.best_params)},
        });
    }
    return out;
}

std::string sweep_csv(const std::vector<SweepRow> &rows) {
    std::ostringstream out;
    out.imbue(std::locale::classic());
    out << "epsilon,best_objective,constraint_residual,feasible,evaluations,best_restart\n";
    for (const SweepRow &r : rows) {
        out << format_double(r.epsilon) << ',' << format_double(r.best_objective) << ','
            << format_double(r.constraint_residual) << ',' << (r.feasible ? "true" : "false") << ','
            << r.result.evaluations << ',' << r.result.best_restart << '\n';
    }
    return out.str();
}

json cascade_to_json(const std::vector<CascadeReport> &rows) {
    json out = json::array();
    for (const CascadeReport &r : rows) {
        out.push_back({
            {"D", r.fanout},
            {"n", r.photon_count},
            {"eta", r.eta},
            {"p_all_distinct", r.p_all_distinct},
            {"p_collision", r.p_collision},
            {"p_miscount", r.p_miscount},
        });
    }
    return out;
}

std::string cascade_csv(const std::vector<CascadeReport> &rows) {
    std::ostringstream out;
    out.imbue(std::locale::classic());
    out << "D,n,eta,p_all_distinct,p_collision,p_miscount\n";
    for (const CascadeReport &r : rows) {
        out << r.fanout << ',' << r.photon_count << ',' << format_double(r.eta) << ','
            << format_double(r.p_all_distinct) << ',' << format_double(r.p_collision) << ','
            << format_double(r.p_miscount) << '\n';
    }
    return out.str();
}

}  // namespace sprcheck::cli
