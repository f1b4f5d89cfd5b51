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

#include "sprcheck/symbolic.h"

#include <numeric>
#include <sstream>

#include "sprcheck/errors.h"

namespace sprcheck {

std::string MatrixElement::to_string() const {
    return "a" + std::to_string(row + 1) + std::to_string(col + 1);
}

ElementProduct::ElementProduct(int dimension)
    : dimension_(dimension), exponents_(static_cast<size_t>(dimension) * static_cast<size_t>(dimension), 0) {
    if (dimension < 1) {
        throw InvalidInput("element product needs dimension >= 1");
    }
}

size_t ElementProduct::index(MatrixElement e) const {
    if (e.row < 0 || e.col < 0 || e.row >= dimension_ || e.col >= dimension_) {
        throw InvalidInput("matrix element " + e.to_string() + " out of range");
    }
    return static_cast<size_t>(e.row) * static_cast<size_t>(dimension_) + static_cast<size_t>(e.col);
}

int ElementProduct::degree() const {
    return std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

void ElementProduct::multiply(MatrixElement e, int power) {
    int next = exponents_[index(e)] + power;
    if (next < 0 || next > 255) {
        throw InvalidInput("element exponent out of range");
    }
    exponents_[index(e)] = static_cast<std::uint8_t>(next);
}

std::vector<std::pair<MatrixElement, int>> ElementProduct::factors() const {
    std::vector<std::pair<MatrixElement, int>> out;
    for (int r = 0; r < dimension_; r++) {
        for (int c = 0; c < dimension_; c++) {
            int p = exponent({r, c});
            if (p > 0) {
                out.emplace_back(MatrixElement{r, c}, p);
            }
        }
    }
    return out;
}

Complex ElementProduct::evaluate(const ComplexMatrix &m) const {
    Complex v = 1.0;
    for (const auto &[e, p] : factors()) {
        for (int k = 0; k < p; k++) {
            v *= m(e.row, e.col);
        }
    }
    return v;
}

std::string ElementProduct::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto &[e, p] : factors()) {
        if (!first) {
            out << ' ';
        }
        first = false;
        out << e.to_string();
        if (p > 1) {
            out << '^' << p;
        }
    }
    return first ? "1" : out.str();
}

SymbolicExpansion symbolic_expand(const ModeMonomial &input) {
    const int modes = input.mode_count();
    if (modes < 1) {
        throw InvalidInput("symbolic expansion needs at least one mode");
    }
    SymbolicExpansion partial;
    partial[ModeMonomial::vacuum(modes)][ElementProduct(modes)] = 1;
    for (int i = 0; i < modes; i++) {
        for (int rep = 0; rep < input[i]; rep++) {
            SymbolicExpansion next;
            for (const auto &[monomial, coefficient] : partial) {
                for (int k = 0; k < modes; k++) {
                    FormalPolynomial &target = next[monomial.shifted(k, 1)];
                    for (const auto &[product, count] : coefficient) {
                        ElementProduct p = product;
                        p.multiply({i, k});
                        target[p] += count;
                    }
                }
            }
            partial = std::move(next);
        }
    }
    return partial;
}

FormalPolynomial restrict_to_nonzero(const FormalPolynomial &poly, const std::set<MatrixElement> &zeros) {
    FormalPolynomial out;
    for (const auto &[product, count] : poly) {
        bool killed = false;
        for (const MatrixElement &z : zeros) {
            if (product.contains(z)) {
                killed = true;
                break;
            }
        }
        if (!killed) {
            out.emplace(product, count);
        }
    }
    return out;
}

Complex evaluate(const FormalPolynomial &poly, const ComplexMatrix &m) {
    Complex total{};
    for (const auto &[product, count] : poly) {
        total += static_cast<double>(count) * product.evaluate(m);
    }
    return total;
}

std::string to_string(const FormalPolynomial &poly) {
    if (poly.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto &[product, count] : poly) {
        if (!first) {
            out << " + ";
        }
        first = false;
        if (count != 1) {
            out << count << ' ';
        }
        out << product.to_string();
    }
    return out.str();
}

}  // namespace sprcheck
