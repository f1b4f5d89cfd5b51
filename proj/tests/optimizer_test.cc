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

#include "sprcheck/optimizer.h"

#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "sprcheck/errors.h"

using namespace sprcheck;

namespace {

constexpr double kPi = std::numbers::pi;

/// Dense scan of 2x2 unitaries. Global and row phases do not change the
/// two-mode probabilities, so |U(0,1)|^2 = sin^2(theta) is the only relevant
/// coordinate; the scan still walks the relative phase to stay honest.
struct GridResult {
    double min_forbidden = 2;
    double max_target = -1;
    double max_target_feasible = -1;
};

GridResult two_mode_grid(double epsilon) {
    GridResult g;
    const int steps = 100;  // pi/200 on [0, pi/2]
    for (int i = 0; i <= steps; i++) {
        double theta = (kPi / 2) * i / steps;
        for (int j = 0; j < 8; j++) {
            double phi = 2 * kPi * j / 8;
            oracle::Matrix u(2, 2);
            u << std::polar(std::cos(theta), phi), -std::sin(theta), std::polar(std::sin(theta), phi), std::cos(theta);
            auto p = oracle::two_mode_type_one(u);
            g.min_forbidden = std::min(g.min_forbidden, p.p_forbidden);
            g.max_target = std::max(g.max_target, p.p_target);
            if (p.p_forbidden <= epsilon) {
                g.max_target_feasible = std::max(g.max_target_feasible, p.p_target);
            }
        }
    }
    return g;
}

}  // namespace

TEST(parametrization, zero_is_identity) {
    for (int m = 1; m <= 4; m++) {
        auto u = materialize(UnitaryParametrization::zero(m));
        ASSERT_LT((u.matrix() - ComplexMatrix::Identity(m, m)).cwiseAbs().maxCoeff(), 1e-15);
    }
}

TEST(parametrization, quarter_turn_is_balanced) {
    UnitaryParametrization p(2, {kPi / 4}, {0, 0, 0});
    auto u = materialize(p);
    for (int r = 0; r < 2; r++) {
        for (int c = 0; c < 2; c++) {
            ASSERT_NEAR(std::abs(u(r, c)), 1 / std::sqrt(2.0), 1e-15);
        }
    }
}

TEST(parametrization, random_points_are_unitary) {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 100; trial++) {
        int m = 1 + trial % 4;
        auto u = materialize(UnitaryParametrization::random(m, rng)).matrix();
        ASSERT_LT((u * u.adjoint() - ComplexMatrix::Identity(m, m)).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(parametrization, decompose_reaches_random_targets) {
    std::mt19937_64 rng(100);
    for (int trial = 0; trial < 100; trial++) {
        int m = trial < 50 ? 2 : 2 + trial % 3;
        auto target = InterferometerUnitary(oracle::gram_schmidt_unitary(m, rng));
        auto fit = decompose(target);
        for (double a : fit.angles()) {
            ASSERT_GE(a, 0.0);
            ASSERT_LE(a, kPi / 2);
        }
        ASSERT_LT((materialize(fit).matrix() - target.matrix()).cwiseAbs().maxCoeff(), 1e-6);
    }
}

TEST(parametrization, flatten_round_trip_and_errors) {
    std::mt19937_64 rng(4);
    auto p = UnitaryParametrization::random(3, rng);
    ASSERT_EQ(p.parameter_count(), 3u + 6u);
    auto q = UnitaryParametrization::unflatten(3, p.flatten());
    ASSERT_EQ(q.angles(), p.angles());
    ASSERT_EQ(q.phases(), p.phases());
    ASSERT_THROW(UnitaryParametrization(3, {0, 0}, {0, 0, 0, 0, 0, 0}), InvalidInput);
    ASSERT_THROW(UnitaryParametrization::unflatten(2, {0, 0}), InvalidInput);
    auto wrapped = UnitaryParametrization(2, {2.0}, {-1, 7, 0}).normalized();
    ASSERT_EQ(wrapped.angles()[0], kPi / 2);
    for (double ph : wrapped.phases()) {
        ASSERT_GE(ph, 0.0);
        ASSERT_LT(ph, 2 * kPi);
    }
}

TEST(optimizer, objective_examples) {
    PhotonInputSpec spec(1, {1});
    // Identity: both signals go straight to the watched detector.
    auto id = UnitaryParametrization::zero(2);
    ASSERT_NEAR(objective(id, DetectorType::TypeI, spec, 1e3, 0.0), 1.0 - 1e3, 1e-9);
    // Balanced splitter: P_forbidden = 1 - 3 (1/2)^2 (1/2) = 5/8.
    UnitaryParametrization balanced(2, {kPi / 4}, {0, 0, 0});
    auto u = materialize(balanced);
    auto p = discrimination_probabilities(u, DetectorType::TypeI, {1});
    ASSERT_NEAR(p.p_forbidden, 5.0 / 8.0, 1e-14);
    ASSERT_NEAR(p.p_forbidden, oracle::two_mode_type_one(u.matrix()).p_forbidden, 1e-14);
    ASSERT_NEAR(p.p_target, 0.5, 1e-14);
    ASSERT_NEAR(objective(balanced, DetectorType::TypeI, spec, 10, 0.0), 0.5 - 10 * (25.0 / 64.0), 1e-12);
    ASSERT_NEAR(objective(balanced, DetectorType::TypeI, spec, 10, 1.0), 0.5, 1e-14);
}

TEST(optimizer, grid_oracle_two_mode) {
    auto loose = two_mode_grid(1.0);
    ASSERT_NEAR(loose.max_target, 1.0, 1e-12);
    // The forbidden probability never drops below 5/9 with two modes.
    ASSERT_NEAR(loose.min_forbidden, 5.0 / 9.0, 1e-3);
    ASSERT_LT(two_mode_grid(1e-2).max_target_feasible, 0.0);
}

TEST(optimizer, vacuous_constraint_reaches_maximum) {
    auto r = search(DetectorType::TypeI, 2, 2, 1.0, 4, 7, 4000);
    ASSERT_TRUE(r.feasible);
    ASSERT_GE(r.objective, 0.5);
    ASSERT_GE(r.objective, two_mode_grid(1.0).max_target - 1e-6);
}

TEST(optimizer, tight_two_mode_constraint_is_infeasible) {
    auto r = search(DetectorType::TypeI, 2, 2, 1e-2, 20, 7, 3000);
    auto grid = two_mode_grid(1e-2);
    ASSERT_LT(grid.max_target_feasible, 0.0);
    ASSERT_FALSE(r.feasible);
    // Least infeasible point sits near the 5/9 floor.
    ASSERT_GE(r.constraint_residual, 5.0 / 9.0 - 1e-9);
    ASSERT_LT(r.constraint_residual, 5.0 / 9.0 + 1e-3);
}

TEST(optimizer, deterministic_under_seed) {
    auto a = search(DetectorType::TypeII, 3, 2, 1e-2, 3, 11, 2000);
    auto b = search(DetectorType::TypeII, 3, 2, 1e-2, 3, 11, 2000);
    ASSERT_EQ(a.objective, b.objective);
    ASSERT_EQ(a.constraint_residual, b.constraint_residual);
    ASSERT_EQ(a.best_params.flatten(), b.best_params.flatten());
    ASSERT_EQ(a.evaluations, b.evaluations);
    ASSERT_EQ(a.best_restart, b.best_restart);
}

TEST(optimizer, result_integrity) {
    for (auto type : {DetectorType::TypeI, DetectorType::TypeII}) {
        auto r = search(type, 3, 2, 1e-1, 3, 5, 2000);
        ASSERT_LE(r.evaluations, 3u * 2000u);
        auto p = discrimination_probabilities(materialize(r.best_params), type, single_photon_auxiliary(3, 2));
        ASSERT_NEAR(p.p_forbidden, r.constraint_residual, 1e-12);
        ASSERT_NEAR(p.p_target, r.objective, 1e-12);
        if (r.feasible) {
            ASSERT_LE(r.constraint_residual, r.epsilon);
        }
    }
}

TEST(optimizer, sweep_is_monotone) {
    std::vector<double> eps{1, 1e-1, 1e-2, 1e-3};
    auto rows = epsilon_sweep(DetectorType::TypeI, 3, 2, eps, 4, 3, 2000);
    ASSERT_EQ(rows.size(), eps.size());
    for (size_t i = 0; i < rows.size(); i++) {
        ASSERT_EQ(rows[i].epsilon, eps[i]);
        if (i > 0) {
            ASSERT_LE(rows[i].best_objective, rows[i - 1].best_objective + 1e-9);
        }
        if (rows[i].feasible) {
            ASSERT_LE(rows[i].constraint_residual, rows[i].epsilon);
        } else {
            ASSERT_EQ(rows[i].best_objective, 0.0);
        }
    }
    ASSERT_GE(rows.front().best_objective, 0.5);
}

TEST(optimizer, zero_epsilon_has_no_discrimination) {
    auto rows = epsilon_sweep(DetectorType::TypeI, 3, 2, {1.0, 0.0}, 4, 9, 3000);
    ASSERT_LE(rows.back().best_objective, 1e-6);
}

TEST(optimizer, argument_errors) {
    ASSERT_THROW(search(DetectorType::TypeI, 2, 2, 0.1, 1, 1, 0), InvalidInput);
    ASSERT_THROW(search(DetectorType::TypeI, 2, 2, 0.1, 0, 1, 10), InvalidInput);
    ASSERT_THROW(search(DetectorType::TypeI, 5, 2, 0.1, 1, 1, 10), UnsupportedParameters);
    ASSERT_THROW(search(DetectorType::TypeI, 2, 3, 0.1, 1, 1, 10), UnsupportedParameters);
    ASSERT_THROW(epsilon_sweep(DetectorType::TypeI, 2, 2, {}, 1, 1, 10), InvalidInput);
    ASSERT_THROW(epsilon_sweep(DetectorType::TypeI, 2, 2, {0.1, 0.1}, 1, 1, 10), InvalidInput);
    ASSERT_THROW(epsilon_sweep(DetectorType::TypeI, 2, 2, {0.1, 1}, 1, 1, 10), InvalidInput);
}
