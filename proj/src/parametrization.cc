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

#include "sprcheck/parametrization.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sprcheck/errors.h"

namespace sprcheck {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
constexpr double kTwoPi = 2 * std::numbers::pi;

size_t rotation_count(int mode_count) {
    return static_cast<size_t>(mode_count) * static_cast<size_t>(mode_count - 1) / 2;
}

double wrap_phase(double phi) {
    double w = std::fmod(phi, kTwoPi);
    if (w < 0) {
        w += kTwoPi;
    }
    return w >= kTwoPi ? 0.0 : w;
}

}  // namespace

UnitaryParametrization::UnitaryParametrization(int mode_count, std::vector<double> angles, std::vector<double> phases)
    : mode_count_(mode_count), angles_(std::move(angles)), phases_(std::move(phases)) {
    if (mode_count < 1) {
        throw InvalidInput("mode count must be at least 1");
    }
    if (angles_.size() != rotation_count(mode_count) ||
        phases_.size() != rotation_count(mode_count) + static_cast<size_t>(mode_count)) {
        throw InvalidInput(
            "parametrization of " + std::to_string(mode_count) + " modes needs " +
            std::to_string(rotation_count(mode_count)) + " angles and " +
            std::to_string(rotation_count(mode_count) + static_cast<size_t>(mode_count)) + " phases");
    }
    for (double v : angles_) {
        if (!std::isfinite(v)) {
            throw InvalidInput("non-finite rotation angle");
        }
    }
    for (double v : phases_) {
        if (!std::isfinite(v)) {
            throw InvalidInput("non-finite phase");
        }
    }
}

UnitaryParametrization UnitaryParametrization::zero(int mode_count) {
    size_t k = rotation_count(std::max(mode_count, 1));
    return UnitaryParametrization(mode_count, std::vector<double>(k, 0.0), std::vector<double>(k + static_cast<size_t>(std::max(mode_count, 0)), 0.0));
}

UnitaryParametrization UnitaryParametrization::random(int mode_count, std::mt19937_64 &rng) {
    UnitaryParametrization p = zero(mode_count);
    std::uniform_real_distribution<double> angle(0.0, kHalfPi);
    std::uniform_real_distribution<double> phase(0.0, kTwoPi);
    for (double &a : p.angles_) {
        a = angle(rng);
    }
    for (double &ph : p.phases_) {
        ph = phase(rng);
    }
    return p;
}

UnitaryParametrization UnitaryParametrization::normalized() const {
    UnitaryParametrization p = *this;
    for (double &a : p.angles_) {
        a = std::clamp(a, 0.0, kHalfPi);
    }
    for (double &ph : p.phases_) {
        ph = wrap_phase(ph);
    }
    return p;
}

std::vector<double> UnitaryParametrization::flatten() const {
    std::vector<double> flat = angles_;
    flat.insert(flat.end(), phases_.begin(), phases_.end());
    return flat;
}

UnitaryParametrization UnitaryParametrization::unflatten(int mode_count, const std::vector<double> &flat) {
    size_t k = rotation_count(mode_count);
    if (flat.size() != 2 * k + static_cast<size_t>(mode_count)) {
        throw InvalidInput("flat parameter vector has the wrong length");
    }
    auto split = flat.begin() + static_cast<std::ptrdiff_t>(k);
    return UnitaryParametrization(mode_count, std::vector<double>(flat.begin(), split), std::vector<double>(split, flat.end()));
}

std::vector<std::pair<int, int>> rotation_pairs(int mode_count) {
    // Nulling order of decompose(): rows from the bottom up, left to right.
    std::vector<std::pair<int, int>> pairs;
    for (int r = mode_count - 1; r >= 1; r--) {
        for (int m = 0; m < r; m++) {
            pairs.emplace_back(m, r);
        }
    }
    return pairs;
}

InterferometerUnitary materialize(const UnitaryParametrization &params) {
    const int modes = params.mode_count();
    const auto pairs = rotation_pairs(modes);
    ComplexMatrix u = ComplexMatrix::Identity(modes, modes);
    for (size_t j = 0; j < pairs.size(); j++) {
        auto [m, n] = pairs[j];
        double c = std::cos(params.angles()[j]);
        double s = std::sin(params.angles()[j]);
        Complex e = std::polar(1.0, params.phases()[j]);
        // Left-multiply by the rotation: only rows m and n change.
        for (int col = 0; col < modes; col++) {
            Complex top = u(m, col);
            Complex bottom = u(n, col);
            u(m, col) = e * c * top - s * bottom;
            u(n, col) = e * s * top + c * bottom;
        }
    }
    for (int k = 0; k < modes; k++) {
        u.row(k) *= std::polar(1.0, params.phases()[pairs.size() + static_cast<size_t>(k)]);
    }
    return InterferometerUnitary(std::move(u));
}

UnitaryParametrization decompose(const InterferometerUnitary &target) {
    const int modes = target.dimension();
    const auto pairs = rotation_pairs(modes);
    ComplexMatrix u = target.matrix();
    std::vector<double> angles(pairs.size());
    std::vector<double> phases(pairs.size() + static_cast<size_t>(modes));

    // Right-multiply by T_j^dagger to null u(n, m); the column pair (m, n)
    // mixes as  col_m <- e^{-i phi} c col_m - s col_n,
    //           col_n <- e^{-i phi} s col_m + c col_n.
    for (size_t j = 0; j < pairs.size(); j++) {
        auto [m, n] = pairs[j];
        Complex x = u(n, m);
        Complex y = u(n, n);
        double theta = std::atan2(std::abs(x), std::abs(y));
        double phi = (std::abs(x) > 0 && std::abs(y) > 0) ? std::arg(x) - std::arg(y) : 0.0;
        angles[j] = theta;
        phases[j] = wrap_phase(phi);
        double c = std::cos(theta);
        double s = std::sin(theta);
        Complex e_conj = std::polar(1.0, -phi);
        for (int row = 0; row < modes; row++) {
            Complex a = u(row, m);
            Complex b = u(row, n);
            u(row, m) = e_conj * c * a - s * b;
            u(row, n) = e_conj * s * a + c * b;
        }
        u(n, m) = 0;
    }
    for (int k = 0; k < modes; k++) {
        phases[pairs.size() + static_cast<size_t>(k)] = wrap_phase(std::arg(u(k, k)));
    }
    return UnitaryParametrization(modes, std::move(angles), std::move(phases));
}

}  // namespace sprcheck
