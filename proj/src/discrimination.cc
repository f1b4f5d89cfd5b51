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

#include "sprcheck/discrimination.h"

#include "sprcheck/errors.h"

namespace sprcheck {

std::string to_string(DetectorType type) {
    return type == DetectorType::TypeI ? "I" : "II";
}

DetectorType parse_detector_type(std::string_view text) {
    if (text == "I" || text == "1" || text == "TypeI" || text == "type-I") {
        return DetectorType::TypeI;
    }
    if (text == "II" || text == "2" || text == "TypeII" || text == "type-II") {
        return DetectorType::TypeII;
    }
    throw InvalidInput("detector type must be I or II, got '" + std::string(text) + "'");
}

int forbidden_signal(DetectorType type) {
    return type == DetectorType::TypeI ? 2 : 1;
}

int target_signal(DetectorType type) {
    return type == DetectorType::TypeI ? 1 : 2;
}

std::vector<int> single_photon_auxiliary(int mode_count, int photon_count) {
    if (mode_count < 1 || photon_count < 1) {
        throw InvalidInput("need at least one mode and one photon");
    }
    if (photon_count > mode_count) {
        throw UnsupportedParameters(
            "one photon per mode needs N <= M, got N=" + std::to_string(photon_count) + " M=" + std::to_string(mode_count));
    }
    std::vector<int> aux(static_cast<size_t>(mode_count - 1), 0);
    for (int m = 0; m < photon_count - 1; m++) {
        aux[static_cast<size_t>(m)] = 1;
    }
    return aux;
}

std::vector<int> spread_auxiliary(int mode_count, int photon_count) {
    if (mode_count < 1 || photon_count < 1) {
        throw InvalidInput("need at least one mode and one photon");
    }
    if (mode_count == 1 && photon_count > 1) {
        throw InvalidInput("a single mode has no room for auxiliary photons");
    }
    std::vector<int> aux(static_cast<size_t>(mode_count - 1), 0);
    for (int p = 0; p < photon_count - 1; p++) {
        aux[static_cast<size_t>(p % (mode_count - 1))] += 1;
    }
    return aux;
}

DiscriminationProbabilities discrimination_probabilities(
    const InterferometerUnitary &u,
    DetectorType type,
    const std::vector<int> &auxiliary,
    const DetectorModel &det,
    int watched_mode) {
    PhotonInputSpec forbidden(forbidden_signal(type), auxiliary);
    PhotonInputSpec target(target_signal(type), auxiliary);
    if (forbidden.mode_count() != u.dimension()) {
        throw InvalidInput("auxiliary occupations do not match the interferometer dimension");
    }
    DiscriminationProbabilities out;
    out.p_forbidden = click_probability(
        apply_unitary(make_input_polynomial(forbidden), u), forbidden.occupation(), watched_mode, det);
    out.p_target =
        click_probability(apply_unitary(make_input_polynomial(target), u), target.occupation(), watched_mode, det);
    return out;
}

}  // namespace sprcheck
