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

// Acceptance suite: one PASS/FAIL line per criterion, with measured runtime
// checked against its budget. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.h"
#include "sprcheck/cascade.h"
#include "sprcheck/cli/run.h"
#include "sprcheck/cli/scenario.h"
#include "sprcheck/fock.h"
#include "sprcheck/measurement.h"
#include "sprcheck/optimizer.h"
#include "sprcheck/permanent.h"
#include "sprcheck/spr_checker.h"

using namespace sprcheck;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

void require(Outcome &o, bool condition, const std::string &what) {
    if (!condition && o.ok) {
        o.ok = false;
        o.detail = what;
    }
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

InterferometerUnitary balanced_two_port() {
    const double h = 1.0 / std::sqrt(2.0);
    ComplexMatrix m(2, 2);
    m << h, h, h, -h;
    return InterferometerUnitary(m);
}

Outcome golden_expansion() {
    Outcome o;
    std::mt19937_64 rng(20260101);
    double worst = 0;
    for (int trial = 0; trial < 20; trial++) {
        oracle::Matrix m = oracle::gram_schmidt_unitary(2, rng);
        InterferometerUnitary u(m);
        Complex a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
        auto one = apply_unitary(make_input_polynomial(PhotonInputSpec(1, {1})), u);
        auto two = apply_unitary(make_input_polynomial(PhotonInputSpec(2, {1})), u);
        const std::pair<ModeMonomial, Complex> expected_one[] = {
            {{2, 0}, a * c}, {{1, 1}, a * d + b * c}, {{0, 2}, b * d}};
        const std::pair<ModeMonomial, Complex> expected_two[] = {
            {{3, 0}, a * a * c},
            {{2, 1}, 2.0 * a * b * c + a * a * d},
            {{1, 2}, 2.0 * a * b * d + b * b * c},
            {{0, 3}, b * b * d}};
        for (const auto &[mono, value] : expected_one) {
            worst = std::max(worst, std::abs(one.coefficient(mono) - value));
        }
        for (const auto &[mono, value] : expected_two) {
            worst = std::max(worst, std::abs(two.coefficient(mono) - value));
        }
    }
    require(o, worst < 1e-12, "max coefficient error " + fmt(worst));
    o.detail = o.ok ? "20 unitaries, max coefficient error " + fmt(worst) : o.detail;
    return o;
}

Outcome hong_ou_mandel() {
    Outcome o;
    ModeMonomial pair{1, 1};
    auto out = apply_unitary(FockPolynomial::from_occupation(pair), balanced_two_port());
    double coefficient = std::abs(out.coefficient(pair));
    double both_click = pattern_probability(out, pair, ClickPattern::parse("CC"), DetectorModel::ideal());
    require(o, coefficient < 1e-12, "|coef(b1 b2)| = " + fmt(coefficient));
    require(o, both_click < 1e-12, "P(click, click) = " + fmt(both_click));
    // Two photons sharing one input port do not interfere away the (1,1) term.
    ModeMonomial bunched{2, 0};
    auto spread = apply_unitary(FockPolynomial::from_occupation(bunched), balanced_two_port());
    double bunched_cc = pattern_probability(spread, bunched, ClickPattern::parse("CC"), DetectorModel::ideal());
    if (o.ok) {
        o.detail = "input a1 a2: |coef(b1 b2)| = " + fmt(coefficient) + ", P(CC) = " + fmt(both_click) +
                   "; input a1^2 (same port) gives P(CC) = " + fmt(bunched_cc);
    }
    return o;
}

Outcome conservation() {
    Outcome o;
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> modes_dist(1, 4);
    std::uniform_int_distribution<int> photons_dist(1, 4);
    double worst_norm = 0;
    double worst_sum = 0;
    for (int trial = 0; trial < 100; trial++) {
        int m = modes_dist(rng);
        int n = photons_dist(rng);
        std::vector<int> occ(static_cast<size_t>(m), 0);
        std::uniform_int_distribution<int> pick(0, m - 1);
        for (int k = 0; k < n; k++) {
            occ[static_cast<size_t>(pick(rng))]++;
        }
        ModeMonomial in(occ);
        FockPolynomial start = FockPolynomial::from_occupation(in);
        FockPolynomial out = apply_unitary(start, InterferometerUnitary(oracle::gram_schmidt_unitary(m, rng)));
        worst_norm = std::max(worst_norm, std::abs(state_norm_squared(out) - state_norm_squared(start)));
        for (double eta : {0.5, 0.9, 1.0}) {
            double total = 0;
            for (const auto &[pattern, p] : signature_distribution(out, in, DetectorModel(eta))) {
                total += p;
            }
            worst_sum = std::max(worst_sum, std::abs(total - 1.0));
        }
    }
    require(o, worst_norm < 1e-9, "norm drift " + fmt(worst_norm));
    require(o, worst_sum < 1e-9, "distribution sum drift " + fmt(worst_sum));
    if (o.ok) {
        o.detail = "100 unitaries, norm drift " + fmt(worst_norm) + ", distribution drift " + fmt(worst_sum);
    }
    return o;
}

Outcome permanent_equivalence() {
    Outcome o;
    std::mt19937_64 rng(44);
    double worst = 0;
    int comparisons = 0;
    for (int trial = 0; trial < 50; trial++) {
        int m = 2 + trial % 3;
        InterferometerUnitary u(oracle::gram_schmidt_unitary(m, rng));
        // Every input and output with at most one photon per mode and equal
        // photon numbers.
        for (unsigned in_bits = 1; in_bits < (1u << m); in_bits++) {
            std::vector<int> in(static_cast<size_t>(m));
            for (int k = 0; k < m; k++) {
                in[static_cast<size_t>(k)] = (in_bits >> k) & 1;
            }
            ModeMonomial input(in);
            FockPolynomial out = apply_unitary(FockPolynomial::from_occupation(input), u);
            for (unsigned out_bits = 1; out_bits < (1u << m); out_bits++) {
                if (__builtin_popcount(out_bits) != __builtin_popcount(in_bits)) {
                    continue;
                }
                std::vector<int> occ(static_cast<size_t>(m));
                for (int k = 0; k < m; k++) {
                    occ[static_cast<size_t>(k)] = (out_bits >> k) & 1;
                }
                ModeMonomial output(occ);
                worst = std::max(worst, std::abs(transition_amplitude(u, input, output) - amplitude(out, output, input)));
                comparisons++;
            }
        }
    }
    require(o, worst < 1e-10, "max amplitude difference " + fmt(worst));
    if (o.ok) {
        o.detail = std::to_string(comparisons) + " amplitudes over 50 unitaries, max difference " + fmt(worst);
    }
    return o;
}

Outcome certificates() {
    Outcome o;
    int count = 0;
    for (auto type : {DetectorType::TypeI, DetectorType::TypeII}) {
        for (int m = 3; m <= 5; m++) {
            for (int n = 2; n < m; n++) {
                auto cert = run_deduction(type, m, n);
                auto v = verify_certificate(cert);
                std::string label = "type " + to_string(type) + " M=" + std::to_string(m) + " N=" + std::to_string(n);
                require(o, cert.steps.size() == static_cast<size_t>(n), label + ": wrong step count");
                require(o, v.ok, label + ": " + v.message);
                count++;
            }
        }
    }
    if (o.ok) {
        o.detail = std::to_string(count) + " certificates verified, each with N steps";
    }
    return o;
}

Outcome falsification() {
    Outcome o;
    struct Case {
        int m;
        int n;
        std::uint64_t samples;
    };
    std::ostringstream detail;
    for (const Case &c : {Case{2, 2, 10000}, Case{3, 2, 1000}}) {
        for (auto type : {DetectorType::TypeI, DetectorType::TypeII}) {
            auto r = brute_force_search(type, c.m, c.n, c.samples, 42);
            double best = r.best_violation ? r.best_violation->p_target : 0.0;
            std::string label = "type " + to_string(type) + " M=" + std::to_string(c.m);
            require(o, r.violations == 0, label + ": " + std::to_string(r.violations) + " violating samples");
            require(o, best <= kTargetSlack, label + ": feasible P_target " + fmt(best));
            detail << (detail.tellp() > 0 ? "; " : "") << label << " " << r.feasible_samples << "/" << r.samples
                   << " feasible, max P_target " << fmt(best);
        }
    }
    if (o.ok) {
        o.detail = detail.str();
    }
    return o;
}

Outcome sweep_collapse() {
    Outcome o;
    std::vector<double> eps{1, 1e-1, 1e-2, 1e-3, 1e-4};
    auto rows = epsilon_sweep(DetectorType::TypeI, 2, 2, eps, 20, 7, kDefaultBudget);
    std::ostringstream detail;
    for (size_t i = 0; i < rows.size(); i++) {
        detail << fmt(rows[i].epsilon) << ":" << fmt(rows[i].best_objective) << (rows[i].feasible ? "" : "*") << " ";
        if (i > 0) {
            require(o, rows[i].best_objective <= rows[i - 1].best_objective + 1e-9,
                    "objective increased at eps " + fmt(rows[i].epsilon));
        }
    }
    require(o, rows.front().best_objective > 0, "no feasible point at eps 1");
    require(o, rows.back().best_objective < 0.1 * rows.front().best_objective,
            "eps 1e-4 value " + fmt(rows.back().best_objective) + " not below 10% of " + fmt(rows.front().best_objective));
    if (o.ok) {
        o.detail = "best P_target by eps " + detail.str() + "(* = no feasible point)";
    }
    return o;
}

Outcome cascade_law() {
    Outcome o;
    double worst = 0;
    for (int d = 1; d <= 16; d++) {
        auto r = cascade_analysis(d, 2, DetectorModel::ideal());
        worst = std::max(worst, std::abs(r.p_collision - 1.0 / d));
    }
    require(o, worst < 1e-9, "max |p_collision - 1/D| " + fmt(worst));
    if (o.ok) {
        o.detail = "D = 1..16, max |p_collision - 1/D| = " + fmt(worst);
    }
    return o;
}

Outcome povm() {
    Outcome o;
    for (int i = 0; i <= 10; i++) {
        DetectorModel det(i / 10.0);
        for (int n = 0; n <= 20; n++) {
            require(o, no_click_weight(n, det) + click_weight(n, det) == 1.0, "completeness fails");
        }
    }
    for (int n = 1; n <= 20; n++) {
        require(o, click_weight(n, DetectorModel::ideal()) == 1.0, "ideal detector misses a photon");
    }
    require(o, click_weight(0, DetectorModel::ideal()) == 0.0, "ideal detector clicks on vacuum");
    if (o.ok) {
        o.detail = "11 efficiencies x n = 0..20 exact; eta = 1 clicks for every n >= 1";
    }
    return o;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Outcome determinism() {
    Outcome o;
    const std::vector<std::string> scenarios = {
        R"({"command": "expand", "modes": 4, "input": [2, 1, 0, 1], "unitary": "random", "seed": 11})",
        R"({"command": "measure", "modes": 3, "input": [1, 1, 0], "versus": [2, 1, 0], "unitary": "random", "seed": 11, "eta": 0.8})",
        R"({"command": "check", "modes": 4, "photons": 3, "type": "I", "samples": 200, "seed": 11})",
        R"({"command": "optimize", "modes": 3, "photons": 2, "epsilons": [1, 0.1, 0.01], "restarts": 3, "budget": 1000, "seed": 11})",
        R"({"command": "cascade", "fanout": [1, 8], "eta": 0.9, "target_collision": 0.1})",
    };
    fs::path base = fs::temp_directory_path() / "sprcheck_acceptance_determinism";
    fs::remove_all(base);
    int compared = 0;
    for (size_t i = 0; i < scenarios.size(); i++) {
        std::vector<fs::path> dirs;
        for (int rep = 0; rep < 2; rep++) {
            cli::Scenario s = cli::parse_scenario(scenarios[i]);
            s.out_dir = (base / (std::to_string(i) + "_" + std::to_string(rep))).string();
            auto outcome = cli::run(s);
            require(o, outcome.exit_code == 0, "scenario " + std::to_string(i) + " failed: " + outcome.summary);
            dirs.push_back(s.out_dir);
        }
        if (!o.ok) {
            break;
        }
        for (const auto &entry : fs::directory_iterator(dirs[0])) {
            std::string name = entry.path().filename().string();
            if (name.ends_with(".meta.json")) {
                continue;
            }
            require(o, fs::exists(dirs[1] / name) && slurp(entry.path()) == slurp(dirs[1] / name),
                    "scenario " + std::to_string(i) + " file " + name + " differs");
            compared++;
        }
    }
    fs::remove_all(base);
    if (o.ok) {
        o.detail = std::to_string(compared) + " report files byte-identical across repeated runs";
    }
    return o;
}

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<Outcome()> check;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "two-mode golden expansion", 1, golden_expansion},
        {2, "Hong-Ou-Mandel cancellation", 1, hong_ou_mandel},
        {3, "norm and distribution conservation", 30, conservation},
        {4, "permanent oracle equivalence", 10, permanent_equivalence},
        {5, "impossibility certificates", 60, certificates},
        {6, "brute-force falsification", 300, falsification},
        {7, "epsilon-sweep collapse", 600, sweep_collapse},
        {8, "cascade collision law", 30, cascade_law},
        {9, "click/no-click POVM", 1, povm},
        {10, "report determinism", 60, determinism},
    };
    int failures = 0;
    for (const Criterion &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && seconds > c.budget_seconds) {
            o = {false, "took " + fmt(seconds) + " s, budget " + fmt(c.budget_seconds) + " s"};
        }
        failures += o.ok ? 0 : 1;
        std::printf("%s [%2d] %-36s %8.3f s  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
