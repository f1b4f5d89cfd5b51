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

#include "sprcheck/unitary.h"

#include <cmath>
#include <string>

#include "sprcheck/errors.h"

namespace sprcheck {

double unitarity_defect(const ComplexMatrix &m) {
    ComplexMatrix d = m * m.adjoint() - ComplexMatrix::Identity(m.rows(), m.cols());
    return d.cwiseAbs().maxCoeff();
}

InterferometerUnitary::InterferometerUnitary(ComplexMatrix entries, double tolerance) : entries_(std::move(entries)) {
    if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) {
        throw InvalidInput(
            "interferometer matrix must be square and non-empty, got " + std::to_string(entries_.rows()) + "x" +
            std::to_string(entries_.cols()));
    }
    if (!entries_.allFinite()) {
        throw InvalidInput("interferometer matrix has non-finite entries");
    }
    double defect = unitarity_defect(entries_);
    if (!(defect <= tolerance)) {
        throw InvalidInput("interferometer matrix is not unitary (max |U U^dagger - I| = " + std::to_string(defect) + ")");
    }
}

InterferometerUnitary InterferometerUnitary::identity(int dimension) {
    if (dimension < 1) {
        throw InvalidInput("dimension must be at least 1");
    }
    return InterferometerUnitary(ComplexMatrix::Identity(dimension, dimension));
}

InterferometerUnitary InterferometerUnitary::then(const InterferometerUnitary &other) const {
    if (other.dimension() != dimension()) {
        throw InvalidInput("cannot compose unitaries of different dimensions");
    }
    return InterferometerUnitary(entries_ * other.entries_);
}

InterferometerUnitary random_unitary(int dimension, std::mt19937_64 &rng) {
    if (dimension < 1) {
        throw InvalidInput("dimension must be at least 1");
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix z(dimension, dimension);
    for (int r = 0; r < dimension; r++) {
        for (int c = 0; c < dimension; c++) {
            double re = gauss(rng);
            double im = gauss(rng);
            z(r, c) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < dimension; k++) {
        Complex d = r(k, k);
        double mag = std::abs(d);
        if (mag > 0) {
            q.col(k) *= d / mag;
        }
    }
    return InterferometerUnitary(std::move(q));
}

std::mt19937_64 stream_for(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed),
        static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(index),
        static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace sprcheck
