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

#ifndef SPRCHECK_SPR_CHECKER_H
#define SPRCHECK_SPR_CHECKER_H

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sprcheck/discrimination.h"
#include "sprcheck/symbolic.h"

namespace sprcheck {

/// One link of the forced-zero chain.
///
/// With the first-column zeros of the earlier steps in place, the coefficient
/// of `witness` in the output polynomial of the forbidden input reduces to a
/// single product `surviving_term`. That coefficient must vanish, so one of
/// its factors is zero. `forced_zero` is the first-column factor taken;
/// `alternatives` are the other first-column factors (other branches of the
/// same case split) and `pruned` are the factors outside column 1, which
/// belong to rows already zero in column 1 and are dismissed because zeroing
/// them for every output column would leave those photons nowhere to go.
struct DeductionStep {
    int power = 0;
    ModeMonomial witness;
    ElementProduct surviving_term{1};
    std::int64_t multiplicity = 0;
    MatrixElement forced_zero;
    std::vector<MatrixElement> alternatives;
    std::vector<MatrixElement> pruned;
};

struct InfeasibilityCertificate {
    DetectorType detector_type = DetectorType::TypeI;
    int mode_count = 0;
    int photon_count = 0;
    std::vector<DeductionStep> steps;
    /// alpha_{r1} = 0 for every row r carrying a photon.
    std::vector<MatrixElement> forced_zeros;
    std::string conclusion;
};

/// Input occupation whose watched-detector clicks are suppressed: two signal
/// photons for type I, one for type II, plus one auxiliary photon in modes
/// 2..N.
ModeMonomial constrained_input(DetectorType type, int mode_count, int photon_count);
/// The other signal with the same auxiliary photons.
ModeMonomial target_input(DetectorType type, int mode_count, int photon_count);

/// Coefficient of b_1^{N+1} for two signal photons and auxiliary occupations
/// `auxiliary` (modes 2..M): alpha_11^2 prod_m alpha_m1^{n_m}. Throws
/// InvalidInput for negative occupations or M < 2.
ElementProduct leading_coefficient_constraint(int mode_count, const std::vector<int> &auxiliary);

/// Builds the forced-zero chain for a detector on output mode 1, always taking
/// the lowest-row first-column factor. Requires 1 <= N <= M (InvalidInput for
/// N < 1, UnsupportedParameters for N > M). Throws InconsistencyError if a
/// step has no witness with a unique surviving term.
InfeasibilityCertificate run_deduction(DetectorType type, int mode_count, int photon_count);

struct VerificationResult {
    bool ok = false;
    /// Index of the first offending step; nullopt when the failure is global
    /// (shape, step count, conclusion).
    std::optional<size_t> failed_step;
    std::string message;

    explicit operator bool() const {
        return ok;
    }
};

/// Independently re-expands the constrained and target polynomials and
/// re-checks every step and the final contradiction.
VerificationResult verify_certificate(const InfeasibilityCertificate &cert);

struct BranchCoverage {
    /// Complete orderings of forced zeros explored.
    std::uint64_t branches = 0;
    /// Each explored branch ended in the contradiction.
    bool all_closed = false;
};

/// Explores every choice of first-column factor at every step, not just the
/// canonical lowest-row one, and checks each branch reaches the contradiction.
BranchCoverage verify_all_branches(DetectorType type, int mode_count, int photon_count);

/// Default floor below which the forbidden click probability counts as zero.
inline constexpr double kForbiddenTolerance = 1e-8;
/// Target click probabilities above this on a feasible sample falsify the theorem.
inline constexpr double kTargetSlack = 1e-6;

struct FalsificationSample {
    std::uint64_t index = 0;
    ComplexMatrix unitary;
    double p_forbidden = 0;
    double p_target = 0;
};

struct FalsificationReport {
    DetectorType detector_type = DetectorType::TypeI;
    int mode_count = 0;
    int photon_count = 0;
    std::vector<int> auxiliary;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double tolerance = kForbiddenTolerance;
    /// Samples with p_forbidden <= tolerance.
    std::uint64_t feasible_samples = 0;
    /// Feasible samples whose p_target exceeds kTargetSlack.
    std::uint64_t violations = 0;
    /// Feasible sample with the largest p_target.
    std::optional<FalsificationSample> best_violation;
    /// Sample with the smallest p_forbidden overall.
    FalsificationSample closest_to_feasible;
};

/// Samples `sample_count` unitaries from stream_for(seed, i). Even indices are
/// near-Haar; odd indices are block-diagonal unitaries between random mode
/// permutations, which hit exact zeros and exercise the constraint boundary.
/// Requires M <= 4 and N <= 4.
FalsificationReport brute_force_search(
    DetectorType type, int mode_count, int photon_count, std::uint64_t sample_count, std::uint64_t seed);
FalsificationReport brute_force_search(
    DetectorType type, const std::vector<int> &auxiliary, std::uint64_t sample_count, std::uint64_t seed);

/// Unitary drawn by brute_force_search for sample `index`.
InterferometerUnitary falsification_unitary(int mode_count, std::uint64_t seed, std::uint64_t index);

}  // namespace sprcheck

#endif
