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

#include "sprcheck/fock.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "sprcheck/errors.h"

namespace sprcheck {

namespace {

double factorial(int n) {
    double r = 1;
    for (int k = 2; k <= n; k++) {
        r *= k;
    }
    return r;
}

}  // namespace

ModeMonomial::ModeMonomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
    for (int e : exponents_) {
        if (e < 0) {
            throw InvalidInput("negative occupation in mode monomial");
        }
    }
}

ModeMonomial::ModeMonomial(std::initializer_list<int> exponents) : ModeMonomial(std::vector<int>(exponents)) {
}

ModeMonomial ModeMonomial::vacuum(int mode_count) {
    if (mode_count < 1) {
        throw InvalidInput("mode count must be at least 1");
    }
    return ModeMonomial(std::vector<int>(static_cast<size_t>(mode_count), 0));
}

int ModeMonomial::degree() const {
    return std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

double ModeMonomial::factorial_product() const {
    double r = 1;
    for (int e : exponents_) {
        r *= factorial(e);
    }
    return r;
}

ModeMonomial ModeMonomial::shifted(int mode, int delta) const {
    std::vector<int> e = exponents_;
    e.at(static_cast<size_t>(mode)) += delta;
    return ModeMonomial(std::move(e));
}

std::string ModeMonomial::to_string() const {
    std::ostringstream out;
    out << '(';
    for (size_t k = 0; k < exponents_.size(); k++) {
        if (k) {
            out << ',';
        }
        out << exponents_[k];
    }
    out << ')';
    return out.str();
}

bool CanonicalOrder::operator()(const ModeMonomial &a, const ModeMonomial &b) const {
    int da = a.degree();
    int db = b.degree();
    if (da != db) {
        return da < db;
    }
    return std::lexicographical_compare(
        a.exponents().begin(), a.exponents().end(), b.exponents().begin(), b.exponents().end(), std::greater<>());
}

FockPolynomial::FockPolynomial(int mode_count) : mode_count_(mode_count) {
    if (mode_count < 1) {
        throw InvalidInput("mode count must be at least 1");
    }
}

FockPolynomial::FockPolynomial(int mode_count, const std::vector<std::pair<ModeMonomial, Complex>> &terms)
    : FockPolynomial(mode_count) {
    for (const auto &[monomial, c] : terms) {
        if (monomial.mode_count() != mode_count_) {
            throw InvalidInput("monomial " + monomial.to_string() + " does not have " + std::to_string(mode_count_) + " modes");
        }
        terms_[monomial] += c;
    }
    validate_and_prune();
}

FockPolynomial::FockPolynomial(int mode_count, TermMap terms) : FockPolynomial(mode_count) {
    terms_ = std::move(terms);
    validate_and_prune();
}

FockPolynomial FockPolynomial::from_occupation(const ModeMonomial &occupation, Complex coefficient) {
    TermMap terms;
    terms.emplace(occupation, coefficient);
    return FockPolynomial(occupation.mode_count(), std::move(terms));
}

void FockPolynomial::validate_and_prune() {
    std::optional<int> seen_degree;
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.mode_count() != mode_count_) {
            throw InvalidInput("monomial " + it->first.to_string() + " does not have " + std::to_string(mode_count_) + " modes");
        }
        int d = it->first.degree();
        if (seen_degree && *seen_degree != d) {
            throw InvalidInput("polynomial mixes total photon numbers " + std::to_string(*seen_degree) + " and " + std::to_string(d));
        }
        seen_degree = d;
        if (std::abs(it->second) < kPruneThreshold) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

std::optional<int> FockPolynomial::degree() const {
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.begin()->first.degree();
}

Complex FockPolynomial::coefficient(const ModeMonomial &monomial) const {
    auto it = terms_.find(monomial);
    return it == terms_.end() ? Complex{} : it->second;
}

PhotonInputSpec::PhotonInputSpec(int signal_photons, std::vector<int> auxiliary)
    : signal_photons_(signal_photons), auxiliary_(std::move(auxiliary)) {
    if (signal_photons_ != 1 && signal_photons_ != 2) {
        throw InvalidInput("signal photon count must be 1 or 2, got " + std::to_string(signal_photons_));
    }
    for (int n : auxiliary_) {
        if (n < 0) {
            throw InvalidInput("negative auxiliary occupation");
        }
    }
}

int PhotonInputSpec::base_photon_count() const {
    return 1 + std::accumulate(auxiliary_.begin(), auxiliary_.end(), 0);
}

ModeMonomial PhotonInputSpec::occupation() const {
    std::vector<int> e;
    e.reserve(auxiliary_.size() + 1);
    e.push_back(signal_photons_);
    e.insert(e.end(), auxiliary_.begin(), auxiliary_.end());
    return ModeMonomial(std::move(e));
}

PhotonInputSpec PhotonInputSpec::with_signal(int signal_photons) const {
    return PhotonInputSpec(signal_photons, auxiliary_);
}

FockPolynomial make_input_polynomial(const PhotonInputSpec &spec) {
    return FockPolynomial::from_occupation(spec.occupation());
}

FockPolynomial substitute_modes(const FockPolynomial &poly, const ComplexMatrix &m) {
    const int modes = poly.mode_count();
    if (m.rows() != modes || m.cols() != modes) {
        throw InvalidInput(
            "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " but the polynomial has " +
            std::to_string(modes) + " modes");
    }

    FockPolynomial::TermMap result;
    for (const auto &[monomial, coefficient] : poly.terms()) {
        // Multiply in one linear form sum_k m(i, k) b_k per input photon.
        FockPolynomial::TermMap partial{{ModeMonomial::vacuum(modes), coefficient}};
        for (int i = 0; i < modes; i++) {
            for (int rep = 0; rep < monomial[i]; rep++) {
                FockPolynomial::TermMap next;
                for (const auto &[term, c] : partial) {
                    for (int k = 0; k < modes; k++) {
                        Complex f = m(i, k);
                        if (f == Complex{}) {
                            continue;
                        }
                        next[term.shifted(k, 1)] += c * f;
                    }
                }
                partial = std::move(next);
            }
        }
        for (const auto &[term, c] : partial) {
            result[term] += c;
        }
    }
    return FockPolynomial(modes, std::move(result));
}

FockPolynomial apply_unitary(const FockPolynomial &poly, const InterferometerUnitary &u) {
    return substitute_modes(poly, u.matrix());
}

Complex amplitude(const FockPolynomial &poly, const ModeMonomial &occupation, const ModeMonomial &input_occupation) {
    if (occupation.mode_count() != poly.mode_count()) {
        throw InvalidInput("occupation " + occupation.to_string() + " has the wrong number of modes");
    }
    if (occupation.degree() != input_occupation.degree()) {
        throw InvalidInput(
            "occupation " + occupation.to_string() + " has photon number " + std::to_string(occupation.degree()) +
            ", expected " + std::to_string(input_occupation.degree()));
    }
    if (auto d = poly.degree(); d && *d != occupation.degree()) {
        throw InvalidInput("occupation " + occupation.to_string() + " does not match the polynomial's photon number");
    }
    return poly.coefficient(occupation) *
           std::sqrt(occupation.factorial_product() / input_occupation.factorial_product());
}

Complex amplitude(const FockPolynomial &poly, const ModeMonomial &occupation, const PhotonInputSpec &input_spec) {
    return amplitude(poly, occupation, input_spec.occupation());
}

double state_norm_squared(const FockPolynomial &poly) {
    double total = 0;
    for (const auto &[monomial, c] : poly.terms()) {
        total += std::norm(c) * monomial.factorial_product();
    }
    return total;
}

std::vector<ModeMonomial> enumerate_occupations(int modes, int photons) {
    if (modes < 1 || photons < 0) {
        throw InvalidInput("enumerate_occupations needs modes >= 1 and photons >= 0");
    }
    std::vector<ModeMonomial> out;
    std::vector<int> e(static_cast<size_t>(modes), 0);
    // Descending lexicographic order on exponents == canonical order.
    auto rec = [&](auto &&self, int mode, int remaining) -> void {
        if (mode == modes - 1) {
            e[static_cast<size_t>(mode)] = remaining;
            out.emplace_back(e);
            return;
        }
        for (int n = remaining; n >= 0; n--) {
            e[static_cast<size_t>(mode)] = n;
            self(self, mode + 1, remaining - n);
        }
    };
    rec(rec, 0, photons);
    return out;
}

}  // namespace sprcheck
