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

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "sprcheck/errors.h"

using namespace sprcheck;

namespace {

oracle::Matrix generic_matrix(int m, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    oracle::Matrix out(m, m);
    for (int r = 0; r < m; r++) {
        for (int c = 0; c < m; c++) {
            out(r, c) = oracle::Complex(g(rng), g(rng));
        }
    }
    return out;
}

/// Largest |coefficient| among outputs with photons in mode 1, from the
/// photon-assignment oracle on an arbitrary (not necessarily unitary) matrix.
double watched_weight(const oracle::Matrix &m, const std::vector<int> &input) {
    double worst = 0;
    for (const auto &[occ, amp] : oracle::state_vector(m, input)) {
        if (occ[0] > 0) {
            worst = std::max(worst, std::abs(amp));
        }
    }
    return worst;
}

std::vector<int> as_vector(const ModeMonomial &m) {
    return m.exponents();
}

void expect_numeric_chain(const InfeasibilityCertificate &cert, std::mt19937_64 &rng) {
    const int m = cert.mode_count;
    auto constrained = as_vector(constrained_input(cert.detector_type, m, cert.photon_count));
    auto target = as_vector(target_input(cert.detector_type, m, cert.photon_count));
    oracle::Matrix a = generic_matrix(m, rng);
    for (const auto &step : cert.steps) {
        // Before the zero, the witness coefficient is generically nonzero.
        auto before = oracle::state_vector(a, constrained);
        ASSERT_GT(std::abs(before.at(step.witness.exponents())), 1e-9) << step.witness.to_string();
        a(step.forced_zero.row, step.forced_zero.col) = 0;
        auto after = oracle::state_vector(a, constrained);
        ASSERT_LT(std::abs(after.at(step.witness.exponents())), 1e-12) << step.witness.to_string();
    }
    ASSERT_LT(watched_weight(a, constrained), 1e-12);
    ASSERT_LT(watched_weight(a, target), 1e-12);
}

}  // namespace

TEST(spr_checker, leading_coefficient_constraint_examples) {
    ASSERT_EQ(leading_coefficient_constraint(2, {1}).to_string(), "a11^2 a21");
    ASSERT_EQ(leading_coefficient_constraint(3, {1, 1}).to_string(), "a11^2 a21 a31");
    ASSERT_EQ(leading_coefficient_constraint(2, {0}).to_string(), "a11^2");
    ASSERT_EQ(leading_coefficient_constraint(3, {2, 0}).to_string(), "a11^2 a21^2");
    ASSERT_THROW(leading_coefficient_constraint(2, {-1}), InvalidInput);
    ASSERT_THROW(leading_coefficient_constraint(3, {1}), InvalidInput);
    ASSERT_THROW(leading_coefficient_constraint(1, {}), InvalidInput);
}

TEST(spr_checker, two_mode_chain) {
    auto cert = run_deduction(DetectorType::TypeI, 2, 2);
    ASSERT_EQ(cert.steps.size(), 2u);
    // b1^3 coefficient a11^2 a21: either a11 = 0 or a21 = 0.
    ASSERT_EQ(cert.steps[0].power, 3);
    ASSERT_EQ(cert.steps[0].surviving_term.to_string(), "a11^2 a21");
    ASSERT_EQ(cert.steps[0].forced_zero, (MatrixElement{0, 0}));
    ASSERT_EQ(cert.steps[0].alternatives, std::vector<MatrixElement>{(MatrixElement{1, 0})});
    // With a11 = 0 only b12^2 a21 survives in b1 b2^2.
    ASSERT_EQ(cert.steps[1].power, 1);
    ASSERT_EQ(cert.steps[1].surviving_term.to_string(), "a12^2 a21");
    ASSERT_EQ(cert.steps[1].forced_zero, (MatrixElement{1, 0}));
    ASSERT_EQ(cert.steps[1].pruned, std::vector<MatrixElement>{(MatrixElement{0, 1})});
    ASSERT_EQ(cert.forced_zeros, (std::vector<MatrixElement>{{0, 0}, {1, 0}}));
    ASSERT_TRUE(verify_certificate(cert));
    ASSERT_NE(cert.conclusion.find("impossible"), std::string::npos);
}

TEST(spr_checker, four_mode_three_photon_chain_matches_oracle) {
    std::mt19937_64 rng(343);
    auto cert = run_deduction(DetectorType::TypeI, 4, 3);
    ASSERT_EQ(cert.steps.size(), 3u);
    ASSERT_TRUE(verify_certificate(cert));
    expect_numeric_chain(cert, rng);
}

TEST(spr_checker, type_two_three_mode_chain) {
    std::mt19937_64 rng(8);
    auto cert = run_deduction(DetectorType::TypeII, 3, 2);
    ASSERT_EQ(cert.steps.size(), 2u);
    ASSERT_EQ(cert.forced_zeros, (std::vector<MatrixElement>{{0, 0}, {1, 0}}));
    ASSERT_TRUE(verify_certificate(cert));
    expect_numeric_chain(cert, rng);
}

TEST(spr_checker, every_regime_up_to_five_modes) {
    std::mt19937_64 rng(1);
    for (auto type : {DetectorType::TypeI, DetectorType::TypeII}) {
        for (int m = 2; m <= 5; m++) {
            for (int n = 1; n <= m; n++) {
                auto cert = run_deduction(type, m, n);
                ASSERT_EQ(cert.steps.size(), static_cast<size_t>(n));
                auto v = verify_certificate(cert);
                ASSERT_TRUE(v) << v.message;
                if (m <= 4) {
                    expect_numeric_chain(cert, rng);
                }
                auto branches = verify_all_branches(type, m, n);
                ASSERT_TRUE(branches.all_closed);
                ASSERT_GE(branches.branches, 1u);
            }
        }
    }
}

TEST(spr_checker, deduction_parameter_errors) {
    ASSERT_THROW(run_deduction(DetectorType::TypeI, 3, 0), InvalidInput);
    ASSERT_THROW(run_deduction(DetectorType::TypeI, 1, 1), InvalidInput);
    ASSERT_THROW(run_deduction(DetectorType::TypeI, 3, 4), UnsupportedParameters);
    ASSERT_THROW(run_deduction(DetectorType::TypeII, 2, 4), UnsupportedParameters);
}

TEST(spr_checker, tampered_certificates_fail) {
    auto good = run_deduction(DetectorType::TypeI, 3, 2);

    auto repeated = good;
    repeated.steps[1].forced_zero = repeated.steps[0].forced_zero;
    auto r = verify_certificate(repeated);
    ASSERT_FALSE(r);
    ASSERT_EQ(r.failed_step, std::optional<size_t>(1));

    auto short_chain = good;
    short_chain.steps.pop_back();
    ASSERT_FALSE(verify_certificate(short_chain));
    ASSERT_EQ(verify_certificate(short_chain).failed_step, std::nullopt);

    auto wrong_term = good;
    wrong_term.steps[0].multiplicity = 2;
    ASSERT_EQ(verify_certificate(wrong_term).failed_step, std::optional<size_t>(0));

    auto wrong_witness = good;
    wrong_witness.steps[1].witness = good.steps[0].witness;
    ASSERT_EQ(verify_certificate(wrong_witness).failed_step, std::optional<size_t>(1));

    auto off_column = good;
    off_column.steps[0].forced_zero = MatrixElement{0, 1};
    ASSERT_EQ(verify_certificate(off_column).failed_step, std::optional<size_t>(0));

    auto swapped = good;
    swapped.detector_type = DetectorType::TypeII;
    ASSERT_FALSE(verify_certificate(swapped));
}

TEST(spr_checker, forced_zeros_silence_single_photon_numerically) {
    // M = 2: the forced zeros empty column 1, so no unitary realizes them; use
    // an arbitrary matrix with a11 = a21 = 0 instead.
    std::mt19937_64 rng(15);
    auto cert = run_deduction(DetectorType::TypeI, 2, 2);
    ComplexMatrix a = generic_matrix(2, rng);
    for (const auto &z : cert.forced_zeros) {
        a(z.row, z.col) = 0;
    }
    auto one = substitute_modes(FockPolynomial::from_occupation(ModeMonomial{1, 1}), a);
    for (const auto &[occ, c] : one.terms()) {
        ASSERT_EQ(occ[0], 0);
    }

    // M = 3: a unitary with a11 = a21 = 0 sends mode 1 only mode-3 light.
    ComplexMatrix u = ComplexMatrix::Zero(3, 3);
    u.block(0, 1, 2, 2) = random_unitary(2, rng).matrix();
    u(2, 0) = Complex(0, 1);
    InterferometerUnitary unitary(u);
    auto p = discrimination_probabilities(unitary, DetectorType::TypeI, {1, 0});
    ASSERT_LT(p.p_target, 1e-12);
    ASSERT_LT(p.p_forbidden, 1e-12);
}

TEST(spr_checker, relabeling_output_modes) {
    // Watching output mode k of U equals watching mode 1 of U with columns 1
    // and k exchanged.
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 10; trial++) {
        auto u = random_unitary(3, rng);
        for (int k = 1; k < 3; k++) {
            ComplexMatrix swapped = u.matrix();
            swapped.col(0).swap(swapped.col(k));
            for (auto type : {DetectorType::TypeI, DetectorType::TypeII}) {
                auto direct = discrimination_probabilities(u, type, {1, 0}, DetectorModel::ideal(), k);
                auto moved = discrimination_probabilities(InterferometerUnitary(swapped), type, {1, 0});
                ASSERT_NEAR(direct.p_forbidden, moved.p_forbidden, 1e-12);
                ASSERT_NEAR(direct.p_target, moved.p_target, 1e-12);
            }
        }
    }
}

TEST(spr_checker, brute_force_two_mode) {
    auto report = brute_force_search(DetectorType::TypeI, 2, 2, 2000, 42);
    ASSERT_EQ(report.samples, 2000u);
    ASSERT_EQ(report.violations, 0u);
    if (report.best_violation) {
        ASSERT_LE(report.best_violation->p_target, 1e-3);
        ASSERT_GE(report.best_violation->p_forbidden, 0.0);
    }
    // Cross-check a few samples against the closed-form two-mode oracle.
    for (std::uint64_t i = 0; i < 20; i++) {
        auto u = falsification_unitary(2, 42, i);
        auto expected = oracle::two_mode_type_one(u.matrix());
        auto got = discrimination_probabilities(u, DetectorType::TypeI, {1});
        ASSERT_NEAR(got.p_forbidden, expected.p_forbidden, 1e-12);
        ASSERT_NEAR(got.p_target, expected.p_target, 1e-12);
    }
}

TEST(spr_checker, brute_force_hits_feasible_boundary) {
    for (auto type : {DetectorType::TypeI, DetectorType::TypeII}) {
        auto report = brute_force_search(type, 3, 2, 400, 5);
        ASSERT_GT(report.feasible_samples, 0u);
        ASSERT_EQ(report.violations, 0u);
        ASSERT_TRUE(report.best_violation.has_value());
        ASSERT_LT(report.best_violation->p_target, kTargetSlack);
    }
}

TEST(spr_checker, brute_force_single_mode) {
    auto report = brute_force_search(DetectorType::TypeI, 1, 1, 50, 3);
    ASSERT_NEAR(report.closest_to_feasible.p_forbidden, 1.0, 1e-12);
    ASSERT_NEAR(report.closest_to_feasible.p_target, 1.0, 1e-12);
    ASSERT_EQ(report.feasible_samples, 0u);
}

TEST(spr_checker, brute_force_deterministic) {
    auto a = brute_force_search(DetectorType::TypeII, 3, 2, 200, 99);
    auto b = brute_force_search(DetectorType::TypeII, 3, 2, 200, 99);
    ASSERT_EQ(a.feasible_samples, b.feasible_samples);
    ASSERT_EQ(a.closest_to_feasible.index, b.closest_to_feasible.index);
    ASSERT_EQ(a.closest_to_feasible.unitary, b.closest_to_feasible.unitary);
    ASSERT_EQ(a.closest_to_feasible.p_forbidden, b.closest_to_feasible.p_forbidden);
    ASSERT_EQ(a.best_violation.has_value(), b.best_violation.has_value());
}

TEST(spr_checker, brute_force_more_photons_than_modes) {
    auto report = brute_force_search(DetectorType::TypeI, 2, 3, 300, 4);
    ASSERT_EQ(report.auxiliary, std::vector<int>{2});
    ASSERT_EQ(report.violations, 0u);
}

TEST(spr_checker, brute_force_errors) {
    ASSERT_THROW(brute_force_search(DetectorType::TypeI, 5, 2, 10, 1), UnsupportedParameters);
    ASSERT_THROW(brute_force_search(DetectorType::TypeI, 3, 5, 10, 1), UnsupportedParameters);
    ASSERT_THROW(brute_force_search(DetectorType::TypeI, 3, 2, 0, 1), InvalidInput);
    ASSERT_THROW(brute_force_search(DetectorType::TypeI, 0, 2, 10, 1), InvalidInput);
}
