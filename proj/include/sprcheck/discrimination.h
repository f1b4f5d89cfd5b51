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

#ifndef SPRCHECK_DISCRIMINATION_H
#define SPRCHECK_DISCRIMINATION_H

#include <string>
#include <string_view>
#include <vector>

#include "sprcheck/fock.h"
#include "sprcheck/measurement.h"
#include "sprcheck/unitary.h"

namespace sprcheck {

/// Type I: the watched detector may click for one signal photon but never for
/// two. Type II: may click for two, never for one.
enum class DetectorType { TypeI, TypeII };

std::string to_string(DetectorType type);
/// Accepts "I", "1", "TypeI" and the same for II.
DetectorType parse_detector_type(std::string_view text);

/// Signal photon count whose click on the watched detector is forbidden.
int forbidden_signal(DetectorType type);
/// Signal photon count whose click the device is supposed to allow.
int target_signal(DetectorType type);

/// One auxiliary photon in each of modes 2..N, the remaining modes empty.
/// Throws UnsupportedParameters when N > M.
std::vector<int> single_photon_auxiliary(int mode_count, int photon_count);

/// N - 1 auxiliary photons spread round-robin over modes 2..M, so N > M is
/// representable. Throws InvalidInput when M == 1 and N > 1.
std::vector<int> spread_auxiliary(int mode_count, int photon_count);

struct DiscriminationProbabilities {
    /// Click probability on the watched detector for the forbidden input.
    double p_forbidden = 0;
    /// Click probability on the watched detector for the target input.
    double p_target = 0;
};

/// Click probabilities on output mode `watched_mode` (mode 1 by default) for
/// both signal inputs sharing `auxiliary`.
DiscriminationProbabilities discrimination_probabilities(
    const InterferometerUnitary &u,
    DetectorType type,
    const std::vector<int> &auxiliary,
    const DetectorModel &det = DetectorModel::ideal(),
    int watched_mode = 0);

}  // namespace sprcheck

#endif
