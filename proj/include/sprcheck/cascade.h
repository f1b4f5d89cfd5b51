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

#ifndef SPRCHECK_CASCADE_H
#define SPRCHECK_CASCADE_H

#include "sprcheck/measurement.h"
#include "sprcheck/unitary.h"

namespace sprcheck {

/// Photons entering one mode and fanned out over `fanout` detectors.
struct CascadeReport {
    int fanout = 0;
    int photon_count = 0;
    double eta = 1;
    /// Every photon lands in its own output mode.
    double p_all_distinct = 0;
    /// At least two photons share an output mode.
    double p_collision = 0;
    /// The number of clicks is smaller than the photon number, counting
    /// detector losses.
    double p_miscount = 0;
};

/// D x D discrete Fourier matrix U(j, k) = exp(2 pi i j k / D) / sqrt(D).
/// Throws InvalidInput for D < 1.
InterferometerUnitary balanced_multiport(int fanout);

/// Expands (sum_k U(1, k) b_k)^n through balanced_multiport(D) and reads off
/// the collision and miscount probabilities. Requires n in {1, 2}, D >= 1.
CascadeReport cascade_analysis(int fanout, int photon_count, const DetectorModel &det);

/// Smallest D whose two-photon collision probability at eta = 1 is at most
/// `target_p_collision`, using the 1/D law. Throws InvalidInput for targets
/// <= 0 and photon counts other than 1 or 2.
int required_fanout(double target_p_collision, int photon_count = 2);

}  // namespace sprcheck

#endif
