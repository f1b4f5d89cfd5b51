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

#ifndef SPRCHECK_MEASUREMENT_H
#define SPRCHECK_MEASUREMENT_H

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sprcheck/fock.h"

namespace sprcheck {

/// Probabilities at or below this are treated as "never happens".
inline constexpr double kZeroProbability = 1e-12;

/// Largest mode count for exhaustive 2^M signature enumeration.
inline constexpr int kMaxEnumeratedModes = 12;

/// Non-photon-resolving detector. `eta` is the amplitude-level efficiency:
/// each photon triggers the detector with probability eta^2.
class DetectorModel {
   public:
    /// Throws InvalidInput unless 0 <= eta <= 1.
    explicit DetectorModel(double eta = 1.0);

    static DetectorModel ideal() {
        return DetectorModel(1.0);
    }

    double eta() const {
        return eta_;
    }
    double quantum_efficiency() const {
        return eta_ * eta_;
    }

   private:
    double eta_;
};

/// (1 - eta^2)^n.
double no_click_weight(int photons, const DetectorModel &det);
/// 1 - (1 - eta^2)^n.
double click_weight(int photons, const DetectorModel &det);

/// Click / no-click outcome for each output mode.
class ClickPattern {
   public:
    ClickPattern() = default;
    explicit ClickPattern(std::vector<bool> clicks) : clicks_(std::move(clicks)) {
    }
    /// Parses strings like "CN" (C = click, N = no click).
    static ClickPattern parse(std::string_view text);
    /// Pattern number `bits` of 2^M, mode k clicking when bit (M-1-k) is set.
    static ClickPattern from_index(int mode_count, unsigned bits);

    int mode_count() const {
        return static_cast<int>(clicks_.size());
    }
    bool clicks(int mode) const {
        return clicks_[static_cast<size_t>(mode)];
    }
    int click_count() const;
    std::string to_string() const;

    auto operator<=>(const ClickPattern &) const = default;

   private:
    std::vector<bool> clicks_;
};

using SignatureDistribution = std::map<ClickPattern, double>;

/// P(pattern) = sum over occupations of |amplitude|^2 prod_k w_k, with w_k the
/// no-click or click weight of the mode's photon number.
double pattern_probability(
    const FockPolynomial &poly, const ModeMonomial &input_occupation, const ClickPattern &pattern, const DetectorModel &det);
double pattern_probability(
    const FockPolynomial &poly, const PhotonInputSpec &input_spec, const ClickPattern &pattern, const DetectorModel &det);

/// Every pattern with nonzero probability. Throws UnsupportedParameters when
/// the mode count exceeds kMaxEnumeratedModes.
SignatureDistribution signature_distribution(
    const FockPolynomial &poly, const ModeMonomial &input_occupation, const DetectorModel &det);
SignatureDistribution signature_distribution(
    const FockPolynomial &poly, const PhotonInputSpec &input_spec, const DetectorModel &det);

/// Marginal probability that the detector on `mode` clicks.
double click_probability(
    const FockPolynomial &poly, const ModeMonomial &input_occupation, int mode, const DetectorModel &det);

/// Entry k is the probability that exactly k detectors click.
std::vector<double> click_count_distribution(
    const FockPolynomial &poly, const ModeMonomial &input_occupation, const DetectorModel &det);

struct SignatureClassification {
    std::set<ClickPattern> one_photon_set;
    std::set<ClickPattern> two_photon_set;
    std::set<ClickPattern> failure_set;
};

/// Splits the union of both supports. A pattern seen only under the one-photon
/// input (dist2 probability <= kZeroProbability) indicates one photon, and
/// conversely; patterns supported by both mean failure. Patterns unsupported
/// by either input are left out.
SignatureClassification classify(const SignatureDistribution &one_photon, const SignatureDistribution &two_photon);

}  // namespace sprcheck

#endif
