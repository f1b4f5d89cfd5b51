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

#include "sprcheck/permanent.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "sprcheck/errors.h"

namespace sprcheck {

namespace {

void require_square(const ComplexMatrix &m) {
    if (m.rows() < 1 || m.rows() != m.cols()) {
        throw InvalidInput("permanent needs a non-empty square matrix");
    }
}

std::vector<Eigen::Index> repeated_indices(const ModeMonomial &occupation) {
    std::vector<Eigen::Index> out;
    for (int k = 0; k < occupation.mode_count(); k++) {
        for (int rep = 0; rep < occupation[k]; rep++) {
            out.push_back(k);
        }
    }
    return out;
}

}  // namespace

Complex permanent(const ComplexMatrix &m) {
    require_square(m);
    const auto n = static_cast<int>(m.rows());
    if (n > 30) {
        throw UnsupportedParameters("permanent of dimension > 30 is out of range");
    }

    // Ryser: perm = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} m(i, j).
    std::vector<Complex> row_sums(static_cast<size_t>(n), Complex{});
    Complex total{};
    std::uint32_t gray = 0;
    const std::uint32_t count = std::uint32_t{1} << n;
    for (std::uint32_t step = 1; step < count; step++) {
        std::uint32_t next = step ^ (step >> 1);
        std::uint32_t flipped = next ^ gray;
        int col = std::countr_zero(flipped);
        double sign = (next & flipped) ? 1.0 : -1.0;
        for (int i = 0; i < n; i++) {
            row_sums[static_cast<size_t>(i)] += sign * m(i, col);
        }
        gray = next;
        Complex prod = 1.0;
        for (const Complex &s : row_sums) {
            prod *= s;
        }
        int subset_size = std::popcount(gray);
        total += ((n - subset_size) % 2 == 0) ? prod : -prod;
    }
    return total;
}

Complex permanent_naive(const ComplexMatrix &m) {
    require_square(m);
    const auto n = static_cast<int>(m.rows());
    if (n > 10) {
        throw UnsupportedParameters("naive permanent limited to dimension 10");
    }
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Complex total{};
    do {
        Complex prod = 1.0;
        for (int i = 0; i < n; i++) {
            prod *= m(i, perm[static_cast<size_t>(i)]);
        }
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Complex transition_amplitude(const InterferometerUnitary &u, const ModeMonomial &input, const ModeMonomial &output) {
    if (input.mode_count() != u.dimension() || output.mode_count() != u.dimension()) {
        throw InvalidInput("occupation lengths must match the unitary dimension");
    }
    if (input.degree() != output.degree()) {
        throw InvalidInput("input and output photon numbers differ");
    }
    if (input.degree() == 0) {
        return 1.0;
    }
    auto rows = repeated_indices(input);
    auto cols = repeated_indices(output);
    ComplexMatrix sub(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (size_t r = 0; r < rows.size(); r++) {
        for (size_t c = 0; c < cols.size(); c++) {
            sub(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = u(static_cast<int>(rows[r]), static_cast<int>(cols[c]));
        }
    }
    return permanent(sub) / std::sqrt(input.factorial_product() * output.factorial_product());
}

}  // namespace sprcheck
