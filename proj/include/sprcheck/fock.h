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

#ifndef SPRCHECK_FOCK_H
#define SPRCHECK_FOCK_H

#include <compare>
#include <complex>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sprcheck/unitary.h"

namespace sprcheck {

/// Coefficients below this magnitude are dropped when a polynomial is
/// canonicalized.
inline constexpr double kPruneThreshold = 1e-15;

/// Exponent vector over the output (or input) creation operators of M modes.
/// Doubles as an occupation-number vector |n_1, ..., n_M>.
class ModeMonomial {
   public:
    ModeMonomial() = default;
    /// Throws InvalidInput on a negative exponent.
    explicit ModeMonomial(std::vector<int> exponents);
    ModeMonomial(std::initializer_list<int> exponents);

    static ModeMonomial vacuum(int mode_count);

    int mode_count() const {
        return static_cast<int>(exponents_.size());
    }
    int degree() const;
    int operator[](int mode) const {
        return exponents_[static_cast<size_t>(mode)];
    }
    const std::vector<int> &exponents() const {
        return exponents_;
    }

    /// prod_k exponents_k!
    double factorial_product() const;

    /// Copy with `delta` added to one mode's exponent.
    ModeMonomial shifted(int mode, int delta) const;

    /// "(2,1,0)"
    std::string to_string() const;

    bool operator==(const ModeMonomial &) const = default;

   private:
    std::vector<int> exponents_;
};

/// Canonical order: graded by total degree, then lexicographic by mode index
/// with larger leading exponents first, so b1^3 < b1^2 b2 < b1 b2^2 < b2^3.
struct CanonicalOrder {
    bool operator()(const ModeMonomial &a, const ModeMonomial &b) const;
};

/// Sparse polynomial in creation operators with complex coefficients. All
/// terms share one mode count and one total degree; no zero coefficients are
/// stored. The empty polynomial is the zero vector.
class FockPolynomial {
   public:
    using TermMap = std::map<ModeMonomial, Complex, CanonicalOrder>;

    explicit FockPolynomial(int mode_count);
    /// Sums duplicate monomials and prunes |c| < kPruneThreshold. Throws
    /// InvalidInput on mixed lengths or mixed total degrees.
    FockPolynomial(int mode_count, const std::vector<std::pair<ModeMonomial, Complex>> &terms);
    FockPolynomial(int mode_count, TermMap terms);

    static FockPolynomial from_occupation(const ModeMonomial &occupation, Complex coefficient = 1.0);

    int mode_count() const {
        return mode_count_;
    }
    /// Total photon number of every term; nullopt for the zero polynomial.
    std::optional<int> degree() const;
    bool empty() const {
        return terms_.empty();
    }
    size_t size() const {
        return terms_.size();
    }
    const TermMap &terms() const {
        return terms_;
    }
    /// Zero for monomials not present.
    Complex coefficient(const ModeMonomial &monomial) const;

   private:
    void validate_and_prune();

    int mode_count_;
    TermMap terms_;
};

/// Photon input for the detection device: `signal_photons` in mode 1 and the
/// auxiliary occupations n_2..n_M in the remaining modes.
class PhotonInputSpec {
   public:
    /// Throws InvalidInput unless signal_photons is 1 or 2 and every auxiliary
    /// occupation is non-negative.
    PhotonInputSpec(int signal_photons, std::vector<int> auxiliary);

    int signal_photons() const {
        return signal_photons_;
    }
    const std::vector<int> &auxiliary() const {
        return auxiliary_;
    }
    int mode_count() const {
        return static_cast<int>(auxiliary_.size()) + 1;
    }
    /// N: one signal photon plus the auxiliary photons.
    int base_photon_count() const;
    ModeMonomial occupation() const;
    /// Same auxiliary resources with a different signal.
    PhotonInputSpec with_signal(int signal_photons) const;

   private:
    int signal_photons_;
    std::vector<int> auxiliary_;
};

/// The unnormalized operator product a_1^s prod_m a_m^{n_m} with coefficient 1.
FockPolynomial make_input_polynomial(const PhotonInputSpec &spec);

/// Replaces every creation operator of mode i by sum_k m(i, k) b_k and
/// collects the expansion. Applies any square matrix; callers wanting a
/// physical evolution go through apply_unitary.
FockPolynomial substitute_modes(const FockPolynomial &poly, const ComplexMatrix &m);

/// Throws InvalidInput when the mode counts differ.
FockPolynomial apply_unitary(const FockPolynomial &poly, const InterferometerUnitary &u);

/// <occupation|psi> for the normalized state built from a single input
/// monomial `input_occupation`: coeff * sqrt(prod occ!) / sqrt(prod in!).
/// Throws InvalidInput on a total-degree or length mismatch.
Complex amplitude(const FockPolynomial &poly, const ModeMonomial &occupation, const ModeMonomial &input_occupation);
Complex amplitude(const FockPolynomial &poly, const ModeMonomial &occupation, const PhotonInputSpec &input_spec);

/// sum |c|^2 prod_k e_k!, the squared norm of the (unnormalized) state.
double state_norm_squared(const FockPolynomial &poly);

/// All occupations of `photons` bosons over `modes` modes, in canonical order.
std::vector<ModeMonomial> enumerate_occupations(int modes, int photons);

}  // namespace sprcheck

#endif
