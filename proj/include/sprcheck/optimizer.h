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

#ifndef SPRCHECK_OPTIMIZER_H
#define SPRCHECK_OPTIMIZER_H

#include <cstdint>
#include <vector>

#include "sprcheck/discrimination.h"
#include "sprcheck/parametrization.h"

namespace sprcheck {

inline constexpr double kInitialPenaltyWeight = 1e3;
inline constexpr double kMaxPenaltyWeight = 1e9;

/// P_target - penalty_weight * max(0, P_forbidden - epsilon)^2 at perfect
/// detector efficiency, with the auxiliary photons of `input_spec`.
double objective(
    const UnitaryParametrization &params,
    DetectorType type,
    const PhotonInputSpec &input_spec,
    double penalty_weight,
    double epsilon);

struct OptimizationResult {
    UnitaryParametrization best_params = UnitaryParametrization::zero(1);
    /// P_target at best_params.
    double objective = 0;
    /// P_forbidden at best_params.
    double constraint_residual = 0;
    double epsilon = 0;
    /// constraint_residual <= epsilon. When false best_params is the least
    /// infeasible point found.
    bool feasible = false;
    int restarts = 0;
    std::uint64_t evaluations = 0;
    /// Restart that produced best_params.
    int best_restart = 0;
};

/// Multi-restart compass search with a quadratic penalty on the forbidden
/// click probability. Each restart starts from UnitaryParametrization::random
/// drawn from stream_for(seed, restart) and spends at most `budget` objective
/// evaluations. Ties across restarts go to the lower index. Requires M <= 4,
/// 1 <= N <= M, restarts >= 1 and budget >= 1.
OptimizationResult search(
    DetectorType type, int mode_count, int photon_count, double epsilon, int restarts, std::uint64_t seed, std::uint64_t budget);

struct SweepRow {
    double epsilon = 0;
    /// Largest P_target over every point evaluated in the sweep that meets
    /// this row's constraint; 0 when nothing does.
    double best_objective = 0;
    /// P_forbidden of the reported point (the least infeasible one when
    /// `feasible` is false).
    double constraint_residual = 0;
    bool feasible = false;
    OptimizationResult result;
};

inline constexpr std::uint64_t kDefaultBudget = 20000;

/// Runs search() at each epsilon (strictly decreasing) and pools the restart
/// optima: a point feasible at a small epsilon is feasible at every larger
/// one, so the best_objective column is non-increasing by construction.
std::vector<SweepRow> epsilon_sweep(
    DetectorType type,
    int mode_count,
    int photon_count,
    const std::vector<double> &epsilons,
    int restarts,
    std::uint64_t seed,
    std::uint64_t budget = kDefaultBudget);

}  // namespace sprcheck

#endif
