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

#include "sprcheck/spr_checker.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "sprcheck/errors.h"

namespace sprcheck {

namespace {

constexpr int kWatchedMode = 0;
constexpr int kMaxBruteForceModes = 4;
constexpr int kMaxBruteForcePhotons = 4;

void require_deduction_regime(int mode_count, int photon_count) {
    if (photon_count < 1) {
        throw InvalidInput("photon count N must be at least 1");
    }
    if (mode_count < 2) {
        throw InvalidInput("mode count M must be at least 2");
    }
    if (photon_count > mode_count) {
        throw UnsupportedParameters(
            "the deduction needs N <= M (one auxiliary photon per mode), got N=" + std::to_string(photon_count) +
            " M=" + std::to_string(mode_count));
    }
}

struct StepFinding {
    int power = 0;
    ModeMonomial witness;
    ElementProduct term{1};
    std::int64_t multiplicity = 0;
};

/// Highest power of b_1 whose class still has surviving terms, and the first
/// witness in it (canonical order) whose coefficient collapses to one product.
std::optional<StepFinding> find_step(const SymbolicExpansion &expansion, const std::set<MatrixElement> &zeros) {
    std::optional<int> active_power;
    for (const auto &[monomial, coefficient] : expansion) {
        int power = monomial[kWatchedMode];
        if (power == 0) {
            continue;
        }
        if (active_power && power != *active_power) {
            // Canonical order visits b_1 powers in decreasing order.
            break;
        }
        FormalPolynomial rest = restrict_to_nonzero(coefficient, zeros);
        if (rest.empty()) {
            continue;
        }
        active_power = power;
        if (rest.size() == 1) {
            return StepFinding{power, monomial, rest.begin()->first, rest.begin()->second};
        }
    }
    if (active_power) {
        throw InconsistencyError(
            "no output monomial with b1^" + std::to_string(*active_power) + " has a unique surviving term");
    }
    return std::nullopt;
}

std::vector<MatrixElement> first_column_factors(const ElementProduct &term, const std::set<MatrixElement> &zeros) {
    std::vector<MatrixElement> out;
    for (const auto &[e, power] : term.factors()) {
        if (e.col == kWatchedMode && !zeros.contains(e)) {
            out.push_back(e);
        }
    }
    return out;
}

bool watched_mode_silent(const SymbolicExpansion &expansion, const std::set<MatrixElement> &zeros) {
    for (const auto &[monomial, coefficient] : expansion) {
        if (monomial[kWatchedMode] > 0 && !restrict_to_nonzero(coefficient, zeros).empty()) {
            return false;
        }
    }
    return true;
}

std::string conclusion_text(DetectorType type, int photon_count) {
    std::string zeros = "a11";
    for (int r = 2; r <= photon_count; r++) {
        zeros += ", a" + std::to_string(r) + "1";
    }
    std::string base = "forced zeros {" + zeros + "} remove every b1 term";
    if (type == DetectorType::TypeI) {
        return base + " of the one-photon output, so the watched detector can never click for one photon; "
                      "a type I detector is impossible";
    }
    return base + " of the two-photon output, so two photons can never trigger the watched detector; "
                  "a type II detector is impossible";
}

std::vector<int> auxiliary_for(int mode_count, int photon_count) {
    return single_photon_auxiliary(mode_count, photon_count);
}

InterferometerUnitary structured_unitary(int mode_count, std::mt19937_64 &rng) {
    ComplexMatrix block = ComplexMatrix::Zero(mode_count, mode_count);
    int start = 0;
    while (start < mode_count) {
        std::uniform_int_distribution<int> size_dist(1, mode_count - start);
        int size = size_dist(rng);
        block.block(start, start, size, size) = random_unitary(size, rng).matrix();
        start += size;
    }
    std::vector<int> rows(static_cast<size_t>(mode_count));
    std::vector<int> cols(static_cast<size_t>(mode_count));
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    ComplexMatrix out(mode_count, mode_count);
    for (int r = 0; r < mode_count; r++) {
        for (int c = 0; c < mode_count; c++) {
            out(r, c) = block(rows[static_cast<size_t>(r)], cols[static_cast<size_t>(c)]);
        }
    }
    return InterferometerUnitary(std::move(out));
}

}  // namespace

ModeMonomial constrained_input(DetectorType type, int mode_count, int photon_count) {
    return PhotonInputSpec(forbidden_signal(type), auxiliary_for(mode_count, photon_count)).occupation();
}

ModeMonomial target_input(DetectorType type, int mode_count, int photon_count) {
    return PhotonInputSpec(target_signal(type), auxiliary_for(mode_count, photon_count)).occupation();
}

ElementProduct leading_coefficient_constraint(int mode_count, const std::vector<int> &auxiliary) {
    if (mode_count < 2) {
        throw InvalidInput("mode count M must be at least 2");
    }
    if (static_cast<int>(auxiliary.size()) != mode_count - 1) {
        throw InvalidInput("auxiliary distribution must list modes 2..M");
    }
    ElementProduct p(mode_count);
    p.multiply({0, 0}, 2);
    for (size_t m = 0; m < auxiliary.size(); m++) {
        if (auxiliary[m] < 0) {
            throw InvalidInput("negative auxiliary occupation");
        }
        if (auxiliary[m] > 0) {
            p.multiply({static_cast<int>(m) + 1, 0}, auxiliary[m]);
        }
    }
    return p;
}

InfeasibilityCertificate run_deduction(DetectorType type, int mode_count, int photon_count) {
    require_deduction_regime(mode_count, photon_count);
    InfeasibilityCertificate cert;
    cert.detector_type = type;
    cert.mode_count = mode_count;
    cert.photon_count = photon_count;

    SymbolicExpansion constrained = symbolic_expand(constrained_input(type, mode_count, photon_count));
    std::set<MatrixElement> zeros;
    while (auto finding = find_step(constrained, zeros)) {
        std::vector<MatrixElement> candidates = first_column_factors(finding->term, zeros);
        if (candidates.empty()) {
            throw InconsistencyError(
                "surviving term " + finding->term.to_string() + " of " + finding->witness.to_string() +
                " has no new first-column factor");
        }
        DeductionStep step;
        step.power = finding->power;
        step.witness = finding->witness;
        step.surviving_term = finding->term;
        step.multiplicity = finding->multiplicity;
        step.forced_zero = candidates.front();
        step.alternatives.assign(candidates.begin() + 1, candidates.end());
        for (const auto &[e, power] : finding->term.factors()) {
            if (e.col != kWatchedMode) {
                step.pruned.push_back(e);
            }
        }
        zeros.insert(step.forced_zero);
        cert.steps.push_back(std::move(step));
    }

    SymbolicExpansion target = symbolic_expand(target_input(type, mode_count, photon_count));
    if (!watched_mode_silent(target, zeros)) {
        throw InconsistencyError("forced zeros do not silence the watched detector for the target input");
    }
    cert.forced_zeros.assign(zeros.begin(), zeros.end());
    cert.conclusion = conclusion_text(type, photon_count);
    return cert;
}

VerificationResult verify_certificate(const InfeasibilityCertificate &cert) {
    auto fail = [](std::optional<size_t> step, std::string message) {
        return VerificationResult{false, step, std::move(message)};
    };
    const int m = cert.mode_count;
    const int n = cert.photon_count;
    if (n < 1 || m < 2 || n > m) {
        return fail(std::nullopt, "certificate parameters outside 1 <= N <= M");
    }
    if (cert.steps.size() != static_cast<size_t>(n)) {
        return fail(std::nullopt, "expected " + std::to_string(n) + " steps, found " + std::to_string(cert.steps.size()));
    }

    ModeMonomial constrained_occupation = constrained_input(cert.detector_type, m, n);
    SymbolicExpansion constrained = symbolic_expand(constrained_occupation);
    std::set<MatrixElement> zeros;
    for (size_t i = 0; i < cert.steps.size(); i++) {
        const DeductionStep &step = cert.steps[i];
        const MatrixElement f = step.forced_zero;
        if (f.col != kWatchedMode || f.row < 0 || f.row >= n) {
            return fail(i, "forced zero " + f.to_string() + " is not a first-column element of a photon-carrying row");
        }
        if (zeros.contains(f)) {
            return fail(i, "forced zero " + f.to_string() + " was already forced earlier");
        }
        if (step.power < 1 || step.witness.mode_count() != m || step.witness[kWatchedMode] != step.power ||
            step.witness.degree() != constrained_occupation.degree()) {
            return fail(i, "witness " + step.witness.to_string() + " is not a b1^" + std::to_string(step.power) + " term");
        }
        for (const auto &[monomial, coefficient] : constrained) {
            if (monomial[kWatchedMode] > step.power && !restrict_to_nonzero(coefficient, zeros).empty()) {
                return fail(i, "class b1^" + std::to_string(step.power) + " is not the leading surviving class");
            }
        }
        auto it = constrained.find(step.witness);
        if (it == constrained.end()) {
            return fail(i, "witness " + step.witness.to_string() + " does not occur in the expansion");
        }
        FormalPolynomial rest = restrict_to_nonzero(it->second, zeros);
        if (rest.size() != 1) {
            return fail(i, "coefficient of " + step.witness.to_string() + " has " + std::to_string(rest.size()) +
                               " surviving terms: " + to_string(rest));
        }
        if (rest.begin()->first != step.surviving_term || rest.begin()->second != step.multiplicity) {
            return fail(i, "surviving term is " + to_string(rest) + ", certificate claims " +
                               std::to_string(step.multiplicity) + " " + step.surviving_term.to_string());
        }
        if (!step.surviving_term.contains(f)) {
            return fail(i, "forced zero " + f.to_string() + " is not a factor of the surviving term");
        }
        for (const auto &[e, power] : step.surviving_term.factors()) {
            if (e.col != kWatchedMode && !zeros.contains(MatrixElement{e.row, kWatchedMode})) {
                return fail(i, "factor " + e.to_string() + " outside column 1 belongs to a row not yet zeroed");
            }
        }
        zeros.insert(f);
    }

    for (int r = 0; r < n; r++) {
        if (!zeros.contains(MatrixElement{r, kWatchedMode})) {
            return fail(std::nullopt, "row " + std::to_string(r + 1) + " was never forced to zero in column 1");
        }
    }
    if (!watched_mode_silent(constrained, zeros)) {
        return fail(std::nullopt, "constrained input still reaches b1 after all steps");
    }
    SymbolicExpansion target = symbolic_expand(target_input(cert.detector_type, m, n));
    if (!watched_mode_silent(target, zeros)) {
        return fail(std::nullopt, "target input still reaches b1: no contradiction");
    }
    return VerificationResult{true, std::nullopt, "verified " + std::to_string(n) + " steps and the contradiction"};
}

BranchCoverage verify_all_branches(DetectorType type, int mode_count, int photon_count) {
    require_deduction_regime(mode_count, photon_count);
    SymbolicExpansion constrained = symbolic_expand(constrained_input(type, mode_count, photon_count));
    SymbolicExpansion target = symbolic_expand(target_input(type, mode_count, photon_count));

    BranchCoverage coverage{0, true};
    auto explore = [&](auto &&self, std::set<MatrixElement> &zeros) -> void {
        std::optional<StepFinding> finding = find_step(constrained, zeros);
        if (!finding) {
            coverage.branches++;
            bool closed = zeros.size() == static_cast<size_t>(photon_count) && watched_mode_silent(target, zeros);
            coverage.all_closed = coverage.all_closed && closed;
            return;
        }
        std::vector<MatrixElement> candidates = first_column_factors(finding->term, zeros);
        if (candidates.empty()) {
            coverage.branches++;
            coverage.all_closed = false;
            return;
        }
        for (const MatrixElement &c : candidates) {
            zeros.insert(c);
            self(self, zeros);
            zeros.erase(c);
        }
    };
    std::set<MatrixElement> zeros;
    explore(explore, zeros);
    return coverage;
}

InterferometerUnitary falsification_unitary(int mode_count, std::uint64_t seed, std::uint64_t index) {
    std::mt19937_64 rng = stream_for(seed, index);
    if (index % 2 == 0) {
        return random_unitary(mode_count, rng);
    }
    return structured_unitary(mode_count, rng);
}

FalsificationReport brute_force_search(
    DetectorType type, const std::vector<int> &auxiliary, std::uint64_t sample_count, std::uint64_t seed) {
    PhotonInputSpec spec(1, auxiliary);
    const int modes = spec.mode_count();
    const int photons = spec.base_photon_count();
    if (modes > kMaxBruteForceModes || photons > kMaxBruteForcePhotons) {
        throw UnsupportedParameters("brute-force search is limited to M <= 4 and N <= 4");
    }
    if (sample_count == 0) {
        throw InvalidInput("sample count must be positive");
    }

    FalsificationReport report;
    report.detector_type = type;
    report.mode_count = modes;
    report.photon_count = photons;
    report.auxiliary = auxiliary;
    report.samples = sample_count;
    report.seed = seed;

    bool have_closest = false;
    for (std::uint64_t i = 0; i < sample_count; i++) {
        InterferometerUnitary u = falsification_unitary(modes, seed, i);
        DiscriminationProbabilities p = discrimination_probabilities(u, type, auxiliary);
        FalsificationSample sample{i, u.matrix(), p.p_forbidden, p.p_target};
        if (!have_closest || p.p_forbidden < report.closest_to_feasible.p_forbidden) {
            report.closest_to_feasible = sample;
            have_closest = true;
        }
        if (p.p_forbidden <= report.tolerance) {
            report.feasible_samples++;
            if (p.p_target > kTargetSlack) {
                report.violations++;
            }
            if (!report.best_violation || p.p_target > report.best_violation->p_target) {
                report.best_violation = std::move(sample);
            }
        }
    }
    return report;
}

FalsificationReport brute_force_search(
    DetectorType type, int mode_count, int photon_count, std::uint64_t sample_count, std::uint64_t seed) {
    if (mode_count < 1 || photon_count < 1) {
        throw InvalidInput("brute-force search needs M >= 1 and N >= 1");
    }
    if (mode_count > kMaxBruteForceModes || photon_count > kMaxBruteForcePhotons) {
        throw UnsupportedParameters("brute-force search is limited to M <= 4 and N <= 4");
    }
    std::vector<int> aux = photon_count <= mode_count ? single_photon_auxiliary(mode_count, photon_count)
                                                      : spread_auxiliary(mode_count, photon_count);
    return brute_force_search(type, aux, sample_count, seed);
}

}  // namespace sprcheck
