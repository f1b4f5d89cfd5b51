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

#include <algorithm>
#include <cmath>
#include <optional>

#include "sprcheck/errors.h"

namespace sprcheck {

namespace {

constexpr int kMaxSearchModes = 4;
constexpr double kInitialStep = 0.25;
constexpr double kReheatStep = 0.05;
constexpr double kMinStep = 1e-10;
constexpr double kTieTolerance = 1e-12;

struct Candidate {
    UnitaryParametrization params = UnitaryParametrization::zero(1);
    double p_target = 0;
    double p_forbidden = 0;
};

struct RestartOutcome {
    std::optional<Candidate> best_feasible;
    Candidate least_infeasible;
    std::uint64_t evaluations = 0;
};

double penalized(const Candidate &c, double weight, double epsilon) {
    double excess = std::max(0.0, c.p_forbidden - epsilon);
    return c.p_target - weight * excess * excess;
}

Candidate evaluate(const std::vector<double> &flat, int modes, DetectorType type, const std::vector<int> &aux) {
    UnitaryParametrization params = UnitaryParametrization::unflatten(modes, flat).normalized();
    DiscriminationProbabilities p = discrimination_probabilities(materialize(params), type, aux);
    return Candidate{std::move(params), p.p_target, p.p_forbidden};
}

RestartOutcome run_restart(
    DetectorType type,
    int modes,
    const std::vector<int> &aux,
    double epsilon,
    std::uint64_t seed,
    int restart,
    std::uint64_t budget) {
    RestartOutcome out;
    auto rng = stream_for(seed, static_cast<std::uint64_t>(restart));
    std::vector<double> x = UnitaryParametrization::random(modes, rng).flatten();

    auto record = [&](const Candidate &c) {
        out.evaluations++;
        if (c.p_forbidden <= epsilon && (!out.best_feasible || c.p_target > out.best_feasible->p_target)) {
            out.best_feasible = c;
        }
        if (out.evaluations == 1 || c.p_forbidden < out.least_infeasible.p_forbidden) {
            out.least_infeasible = c;
        }
    };

    double weight = kInitialPenaltyWeight;
    Candidate current = evaluate(x, modes, type, aux);
    record(current);
    x = current.params.flatten();
    double value = penalized(current, weight, epsilon);
    double step = kInitialStep;

    while (out.evaluations < budget) {
        bool improved = false;
        for (size_t i = 0; i < x.size() && !improved && out.evaluations < budget; i++) {
            for (double dir : {1.0, -1.0}) {
                if (out.evaluations >= budget) {
                    break;
                }
                std::vector<double> y = x;
                y[i] += dir * step;
                Candidate trial = evaluate(y, modes, type, aux);
                record(trial);
                double trial_value = penalized(trial, weight, epsilon);
                if (trial_value > value) {
                    current = std::move(trial);
                    x = current.params.flatten();
                    value = trial_value;
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) {
            step *= 0.5;
        }
        if (step < kMinStep) {
            if (current.p_forbidden > epsilon && weight < kMaxPenaltyWeight) {
                weight = std::min(2 * weight, kMaxPenaltyWeight);
                value = penalized(current, weight, epsilon);
                step = kReheatStep;
            } else {
                break;
            }
        }
    }
    return out;
}

OptimizationResult to_result(const Candidate &c, double epsilon, int restarts, std::uint64_t evaluations, int restart) {
    OptimizationResult r;
    r.best_params = c.params;
    r.objective = c.p_target;
    r.constraint_residual = c.p_forbidden;
    r.epsilon = epsilon;
    r.feasible = c.p_forbidden <= epsilon;
    r.restarts = restarts;
    r.evaluations = evaluations;
    r.best_restart = restart;
    return r;
}

void require_search_regime(int mode_count, int photon_count, int restarts, std::uint64_t budget) {
    if (budget == 0) {
        throw InvalidInput("evaluation budget must be positive");
    }
    if (restarts < 1) {
        throw InvalidInput("need at least one restart");
    }
    if (mode_count < 2 || photon_count < 1) {
        throw InvalidInput("search needs M >= 2 and N >= 1");
    }
    if (mode_count > kMaxSearchModes || photon_count > mode_count) {
        throw UnsupportedParameters("search supports M <= 4 and N <= M");
    }
}

}  // namespace

double objective(
    const UnitaryParametrization &params,
    DetectorType type,
    const PhotonInputSpec &input_spec,
    double penalty_weight,
    double epsilon) {
    if (params.mode_count() != input_spec.mode_count()) {
        throw InvalidInput("parametrization and input spec disagree on the mode count");
    }
    DiscriminationProbabilities p = discrimination_probabilities(materialize(params), type, input_spec.auxiliary());
    Candidate c{params, p.p_target, p.p_forbidden};
    return penalized(c, penalty_weight, epsilon);
}

OptimizationResult search(
    DetectorType type, int mode_count, int photon_count, double epsilon, int restarts, std::uint64_t seed, std::uint64_t budget) {
    require_search_regime(mode_count, photon_count, restarts, budget);
    if (!(epsilon >= 0)) {
        throw InvalidInput("epsilon must be non-negative");
    }
    const std::vector<int> aux = single_photon_auxiliary(mode_count, photon_count);

    std::uint64_t evaluations = 0;
    std::optional<std::pair<Candidate, int>> feasible;
    std::optional<std::pair<Candidate, int>> infeasible;
    for (int r = 0; r < restarts; r++) {
        RestartOutcome o = run_restart(type, mode_count, aux, epsilon, seed, r, budget);
        evaluations += o.evaluations;
        if (o.best_feasible && (!feasible || o.best_feasible->p_target > feasible->first.p_target + kTieTolerance)) {
            feasible = {*o.best_feasible, r};
        }
        if (!infeasible || o.least_infeasible.p_forbidden < infeasible->first.p_forbidden - kTieTolerance) {
            infeasible = {o.least_infeasible, r};
        }
    }
    const auto &[chosen, restart] = feasible ? *feasible : *infeasible;
    return to_result(chosen, epsilon, restarts, evaluations, restart);
}

std::vector<SweepRow> epsilon_sweep(
    DetectorType type,
    int mode_count,
    int photon_count,
    const std::vector<double> &epsilons,
    int restarts,
    std::uint64_t seed,
    std::uint64_t budget) {
    if (epsilons.empty()) {
        throw InvalidInput("epsilon list is empty");
    }
    for (size_t i = 0; i < epsilons.size(); i++) {
        if (!(epsilons[i] >= 0)) {
            throw InvalidInput("epsilon values must be non-negative");
        }
        if (i > 0 && !(epsilons[i] < epsilons[i - 1])) {
            throw InvalidInput("epsilon list must be strictly decreasing");
        }
    }
    require_search_regime(mode_count, photon_count, restarts, budget);
    const std::vector<int> aux = single_photon_auxiliary(mode_count, photon_count);

    struct PoolEntry {
        Candidate candidate;
        size_t sweep_index;
        int restart;
    };
    std::vector<PoolEntry> pool;
    std::vector<std::uint64_t> evaluations(epsilons.size(), 0);
    for (size_t e = 0; e < epsilons.size(); e++) {
        for (int r = 0; r < restarts; r++) {
            RestartOutcome o = run_restart(type, mode_count, aux, epsilons[e], seed, r, budget);
            evaluations[e] += o.evaluations;
            if (o.best_feasible) {
                pool.push_back({*o.best_feasible, e, r});
            }
            pool.push_back({o.least_infeasible, e, r});
        }
    }

    std::vector<SweepRow> rows;
    for (size_t e = 0; e < epsilons.size(); e++) {
        const double eps = epsilons[e];
        const PoolEntry *best = nullptr;
        const PoolEntry *closest = nullptr;
        for (const PoolEntry &p : pool) {
            if (p.candidate.p_forbidden <= eps &&
                (!best || p.candidate.p_target > best->candidate.p_target + kTieTolerance)) {
                best = &p;
            }
            if (!closest || p.candidate.p_forbidden < closest->candidate.p_forbidden - kTieTolerance) {
                closest = &p;
            }
        }
        const PoolEntry &chosen = best ? *best : *closest;
        SweepRow row;
        row.epsilon = eps;
        row.feasible = best != nullptr;
        row.best_objective = row.feasible ? chosen.candidate.p_target : 0.0;
        row.constraint_residual = chosen.candidate.p_forbidden;
        row.result = to_result(chosen.candidate, eps, restarts, evaluations[e], chosen.restart);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace sprcheck
