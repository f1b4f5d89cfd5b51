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

#ifndef SPRCHECK_SYMBOLIC_H
#define SPRCHECK_SYMBOLIC_H

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sprcheck/fock.h"

namespace sprcheck {

/// Symbolic matrix element alpha_{row+1, col+1} (stored zero-based).
struct MatrixElement {
    int row = 0;
    int col = 0;

    /// "a21" style, one-based.
    std::string to_string() const;
    auto operator<=>(const MatrixElement &) const = default;
};

/// A product of matrix elements with multiplicities, e.g. a11^2 a21.
class ElementProduct {
   public:
    explicit ElementProduct(int dimension);

    int dimension() const {
        return dimension_;
    }
    int exponent(MatrixElement e) const {
        return exponents_[index(e)];
    }
    int degree() const;
    void multiply(MatrixElement e, int power = 1);
    bool contains(MatrixElement e) const {
        return exponent(e) > 0;
    }
    /// Distinct factors in row-major order with their powers.
    std::vector<std::pair<MatrixElement, int>> factors() const;
    /// Product with the exponent of each factor; compare with evaluate().
    Complex evaluate(const ComplexMatrix &m) const;

    /// "a11^2 a21"; "1" for the empty product.
    std::string to_string() const;

    auto operator<=>(const ElementProduct &) const = default;

   private:
    size_t index(MatrixElement e) const;

    int dimension_;
    std::vector<std::uint8_t> exponents_;
};

/// Integer-coefficient polynomial in the matrix elements. Coefficients are
/// multinomial counts and never cancel, so an absent key means "no such term".
using FormalPolynomial = std::map<ElementProduct, std::int64_t>;

/// Output monomial -> formal coefficient.
using SymbolicExpansion = std::map<ModeMonomial, FormalPolynomial, CanonicalOrder>;

/// Expands prod_i (sum_k alpha_{ik} b_k)^{input_i} keeping the coefficients as
/// formal products.
SymbolicExpansion symbolic_expand(const ModeMonomial &input);

/// Drops every term containing one of `zeros`.
FormalPolynomial restrict_to_nonzero(const FormalPolynomial &poly, const std::set<MatrixElement> &zeros);

Complex evaluate(const FormalPolynomial &poly, const ComplexMatrix &m);

std::string to_string(const FormalPolynomial &poly);

}  // namespace sprcheck

#endif
