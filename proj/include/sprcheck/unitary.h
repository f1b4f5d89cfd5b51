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

#ifndef SPRCHECK_UNITARY_H
#define SPRCHECK_UNITARY_H

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace sprcheck {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kUnitarityTolerance = 1e-10;

/// Largest entrywise deviation of m * m^dagger from the identity.
double unitarity_defect(const ComplexMatrix &m);

/// An M x M matrix whose unitarity has been checked on construction.
///
/// Entry (i, k) is the amplitude for input mode i to feed output mode k, so an
/// input creation operator a_i is replaced by sum_k U(i, k) b_k.
class InterferometerUnitary {
   public:
    /// Throws InvalidInput if the matrix is empty, not square, or not unitary
    /// within `tolerance` entrywise.
    explicit InterferometerUnitary(ComplexMatrix entries, double tolerance = kUnitarityTolerance);

    static InterferometerUnitary identity(int dimension);

    int dimension() const {
        return static_cast<int>(entries_.rows());
    }
    const ComplexMatrix &matrix() const {
        return entries_;
    }
    Complex operator()(int row, int col) const {
        return entries_(row, col);
    }

    /// Matrix product this * other. Substituting this unitary and then `other`
    /// is the same as substituting the product.
    InterferometerUnitary then(const InterferometerUnitary &other) const;

   private:
    ComplexMatrix entries_;
};

/// Near-Haar random unitary: Householder QR of a complex Gaussian matrix with
/// the phases of R's diagonal folded back into Q.
InterferometerUnitary random_unitary(int dimension, std::mt19937_64 &rng);

/// Deterministic per-index generator stream, so samples can be drawn in any
/// order (or in parallel) and still reproduce.
std::mt19937_64 stream_for(std::uint64_t seed, std::uint64_t index);

}  // namespace sprcheck

#endif
