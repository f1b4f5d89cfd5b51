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

#ifndef SPRCHECK_PARAMETRIZATION_H
#define SPRCHECK_PARAMETRIZATION_H

#include <random>
#include <utility>
#include <vector>

#include "sprcheck/unitary.h"

namespace sprcheck {

/// U = D * T_K * ... * T_1, where T_j is a planar rotation on the mode pair
/// rotation_pairs(M)[j] with angle theta_j in [0, pi/2] and phase phi_j, and D
/// is diagonal with M phases. On its pair (m, n) a rotation acts as
///
///     [ e^{i phi} cos(theta)   -sin(theta) ]
///     [ e^{i phi} sin(theta)    cos(theta) ]
///
/// `phases` holds the K rotation phases followed by the M diagonal phases.
class UnitaryParametrization {
   public:
    /// Throws InvalidInput on wrong vector lengths or M < 1.
    UnitaryParametrization(int mode_count, std::vector<double> angles, std::vector<double> phases);

    static UnitaryParametrization zero(int mode_count);
    /// Angles uniform in [0, pi/2], phases uniform in [0, 2 pi).
    static UnitaryParametrization random(int mode_count, std::mt19937_64 &rng);

    /// Same point with angles clamped into [0, pi/2] and phases wrapped into
    /// [0, 2 pi).
    UnitaryParametrization normalized() const;

    int mode_count() const {
        return mode_count_;
    }
    const std::vector<double> &angles() const {
        return angles_;
    }
    const std::vector<double> &phases() const {
        return phases_;
    }

    /// Angles then phases, for optimizers.
    std::vector<double> flatten() const;
    static UnitaryParametrization unflatten(int mode_count, const std::vector<double> &flat);
    size_t parameter_count() const {
        return angles_.size() + phases_.size();
    }

   private:
    int mode_count_;
    std::vector<double> angles_;
    std::vector<double> phases_;
};

/// M(M-1)/2 mode pairs in application order.
std::vector<std::pair<int, int>> rotation_pairs(int mode_count);

InterferometerUnitary materialize(const UnitaryParametrization &params);

/// Exact inverse of materialize by Givens nulling: materialize(decompose(u))
/// reproduces u to rounding.
UnitaryParametrization decompose(const InterferometerUnitary &u);

}  // namespace sprcheck

#endif
