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

#include "sprcheck/cascade.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sprcheck/errors.h"
#include "sprcheck/fock.h"

namespace sprcheck {

InterferometerUnitary balanced_multiport(int fanout) {
    if (fanout < 1) {
        throw InvalidInput("fan-out must be at least 1");
    }
    ComplexMatrix u(fanout, fanout);
    const double norm = 1.0 / std::sqrt(static_cast<double>(fanout));
    for (int j = 0; j < fanout; j++) {
        for (int k = 0; k < fanout; k++) {
            // Reduce j*k first so the phase argument stays small.
            int t = (j * k) % fanout;
            u(j, k) = std::polar(norm, 2 * std::numbers::pi * t / fanout);
        }
    }
    return InterferometerUnitary(std::move(u), 1e-12);
}

CascadeReport cascade_analysis(int fanout, int photon_count, const DetectorModel &det) {
    if (fanout < 1) {
        throw InvalidInput("fan-out must be at least 1");
    }
    if (photon_count != 1 && photon_count != 2) {
        throw InvalidInput("cascade analysis handles 1 or 2 photons, got " + std::to_string(photon_count));
    }
    std::vector<int> input(static_cast<size_t>(fanout), 0);
    input[0] = photon_count;
    ModeMonomial input_occupation(std::move(input));
    FockPolynomial out = apply_unitary(FockPolynomial::from_occupation(input_occupation), balanced_multiport(fanout));

    CascadeReport report;
    report.fanout = fanout;
    report.photon_count = photon_count;
    report.eta = det.eta();
    for (const auto &[occupation, c] : out.terms()) {
        double p = std::norm(amplitude(out, occupation, input_occupation));
        const auto &e = occupation.exponents();
        if (std::all_of(e.begin(), e.end(), [](int n) { return n <= 1; })) {
            report.p_all_distinct += p;
        } else {
            report.p_collision += p;
        }
    }
    std::vector<double> clicks = click_count_distribution(out, input_occupation, det);
    for (int k = 0; k < photon_count && k < static_cast<int>(clicks.size()); k++) {
        report.p_miscount += clicks[static_cast<size_t>(k)];
    }
    report.p_all_distinct = std::clamp(report.p_all_distinct, 0.0, 1.0);
    report.p_collision = std::clamp(report.p_collision, 0.0, 1.0);
    report.p_miscount = std::clamp(report.p_miscount, 0.0, 1.0);
    return report;
}

int required_fanout(double target_p_collision, int photon_count) {
    if (!(target_p_collision > 0)) {
        throw InvalidInput("target collision probability must be positive");
    }
    if (photon_count != 1 && photon_count != 2) {
        throw InvalidInput("required_fanout handles 1 or 2 photons");
    }
    if (photon_count == 1 || target_p_collision >= 1) {
        return 1;
    }
    if (target_p_collision < 1e-9) {
        throw UnsupportedParameters("target collision probability below 1e-9 needs an impractical fan-out");
    }
    auto collision = [](long d) { return 1.0 / static_cast<double>(d); };
    long d = std::max(1L, static_cast<long>(std::ceil(1.0 / target_p_collision)));
    while (d > 1 && collision(d - 1) <= target_p_collision) {
        d--;
    }
    while (collision(d) > target_p_collision) {
        d++;
    }
    return static_cast<int>(d);
}

}  // namespace sprcheck
