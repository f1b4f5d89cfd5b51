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

#include "sprcheck/measurement.h"

#include <algorithm>
#include <cmath>

#include "sprcheck/errors.h"

namespace sprcheck {

namespace {

double probability_weight(const FockPolynomial &poly, const ModeMonomial &occupation, const ModeMonomial &input) {
    return std::norm(amplitude(poly, occupation, input));
}

void require_modes(const FockPolynomial &poly, const ModeMonomial &input, int pattern_modes) {
    if (input.mode_count() != poly.mode_count() || pattern_modes != poly.mode_count()) {
        throw InvalidInput("mode counts of state, input and detector pattern differ");
    }
}

}  // namespace

DetectorModel::DetectorModel(double eta) : eta_(eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw InvalidInput("detector efficiency eta must lie in [0, 1], got " + std::to_string(eta));
    }
}

double no_click_weight(int photons, const DetectorModel &det) {
    if (photons < 0) {
        throw InvalidInput("photon number must be non-negative");
    }
    return std::pow(1.0 - det.quantum_efficiency(), photons);
}

double click_weight(int photons, const DetectorModel &det) {
    return 1.0 - no_click_weight(photons, det);
}

ClickPattern ClickPattern::parse(std::string_view text) {
    if (text.empty()) {
        throw InvalidInput("click pattern must name at least one mode");
    }
    std::vector<bool> clicks;
    for (char ch : text) {
        if (ch == 'C' || ch == 'c') {
            clicks.push_back(true);
        } else if (ch == 'N' || ch == 'n') {
            clicks.push_back(false);
        } else {
            throw InvalidInput("click pattern characters must be C or N, got '" + std::string(1, ch) + "'");
        }
    }
    return ClickPattern(std::move(clicks));
}

ClickPattern ClickPattern::from_index(int mode_count, unsigned bits) {
    std::vector<bool> clicks(static_cast<size_t>(mode_count));
    for (int k = 0; k < mode_count; k++) {
        clicks[static_cast<size_t>(k)] = (bits >> (mode_count - 1 - k)) & 1u;
    }
    return ClickPattern(std::move(clicks));
}

int ClickPattern::click_count() const {
    return static_cast<int>(std::count(clicks_.begin(), clicks_.end(), true));
}

std::string ClickPattern::to_string() const {
    std::string s;
    s.reserve(clicks_.size());
    for (bool c : clicks_) {
        s.push_back(c ? 'C' : 'N');
    }
    return s;
}

double pattern_probability(
    const FockPolynomial &poly, const ModeMonomial &input_occupation, const ClickPattern &pattern, const DetectorModel &det) {
    require_modes(poly, input_occupation, pattern.mode_count());
    double total = 0;
    for (const auto &[occupation, c] : poly.terms()) {
        double w = probability_weight(poly, occupation, input_occupation);
        for (int k = 0; k < occupation.mode_count() && w > 0; k++) {
            w *= pattern.clicks(k) ? click_weight(occupation[k], det) : no_click_weight(occupation[k], det);
        }
        total += w;
    }
    return total;
}

double pattern_probability(
    const FockPolynomial &poly, const PhotonInputSpec &input_spec, const ClickPattern &pattern, const DetectorModel &det) {
    return pattern_probability(poly, input_spec.occupation(), pattern, det);
}

SignatureDistribution signature_distribution(
    const FockPolynomial &poly, const ModeMonomial &input_occupation, const DetectorModel &det) {
    const int modes = poly.mode_count();
    if (modes > kMaxEnumeratedModes) {
        throw UnsupportedParameters(
            "signature enumeration supports at most " + std::to_string(kMaxEnumeratedModes) + " modes, got " +
            std::to_string(modes));
    }
    require_modes(poly, input_occupation, modes);

    // Accumulate per term over the subsets of its occupied modes; empty modes
    // never click.
    SignatureDistribution dist;
    for (const auto &[occupation, c] : poly.terms()) {
        double p = probability_weight(poly, occupation, input_occupation);
        std::vector<int> occupied;
        for (int k = 0; k < modes; k++) {
            if (occupation[k] > 0) {
                occupied.push_back(k);
            }
        }
        const unsigned subsets = 1u << occupied.size();
        for (unsigned s = 0; s < subsets; s++) {
            std::vector<bool> clicks(static_cast<size_t>(modes), false);
            double w = p;
            for (size_t j = 0; j < occupied.size(); j++) {
                int k = occupied[j];
                bool click = (s >> j) & 1u;
                clicks[static_cast<size_t>(k)] = click;
                w *= click ? click_weight(occupation[k], det) : no_click_weight(occupation[k], det);
            }
            if (w > 0) {
                dist[ClickPattern(std::move(clicks))] += w;
            }
        }
    }
    return dist;
}

SignatureDistribution signature_distribution(
    const FockPolynomial &poly, const PhotonInputSpec &input_spec, const DetectorModel &det) {
    return signature_distribution(poly, input_spec.occupation(), det);
}

double click_probability(
    const FockPolynomial &poly, const ModeMonomial &input_occupation, int mode, const DetectorModel &det) {
    require_modes(poly, input_occupation, poly.mode_count());
    if (mode < 0 || mode >= poly.mode_count()) {
        throw InvalidInput("detector mode " + std::to_string(mode) + " out of range");
    }
    double total = 0;
    for (const auto &[occupation, c] : poly.terms()) {
        total += probability_weight(poly, occupation, input_occupation) * click_weight(occupation[mode], det);
    }
    return std::clamp(total, 0.0, 1.0);
}

std::vector<double> click_count_distribution(
    const FockPolynomial &poly, const ModeMonomial &input_occupation, const DetectorModel &det) {
    require_modes(poly, input_occupation, poly.mode_count());
    const int modes = poly.mode_count();
    std::vector<double> dist(static_cast<size_t>(modes) + 1, 0.0);
    for (const auto &[occupation, c] : poly.terms()) {
        // Detectors fire independently given the occupation: Poisson-binomial.
        std::vector<double> counts{1.0};
        for (int k = 0; k < modes; k++) {
            if (occupation[k] == 0) {
                continue;
            }
            double pc = click_weight(occupation[k], det);
            std::vector<double> next(counts.size() + 1, 0.0);
            for (size_t j = 0; j < counts.size(); j++) {
                next[j] += counts[j] * (1.0 - pc);
                next[j + 1] += counts[j] * pc;
            }
            counts = std::move(next);
        }
        double p = probability_weight(poly, occupation, input_occupation);
        for (size_t j = 0; j < counts.size(); j++) {
            dist[j] += p * counts[j];
        }
    }
    return dist;
}

SignatureClassification classify(const SignatureDistribution &one_photon, const SignatureDistribution &two_photon) {
    auto probability_of = [](const SignatureDistribution &d, const ClickPattern &p) {
        auto it = d.find(p);
        return it == d.end() ? 0.0 : it->second;
    };
    std::set<ClickPattern> patterns;
    for (const auto &[p, _] : one_photon) {
        patterns.insert(p);
    }
    for (const auto &[p, _] : two_photon) {
        patterns.insert(p);
    }
    int modes = -1;
    SignatureClassification result;
    for (const ClickPattern &p : patterns) {
        if (modes >= 0 && p.mode_count() != modes) {
            throw InvalidInput("classify needs distributions over the same mode count");
        }
        modes = p.mode_count();
        bool seen_one = probability_of(one_photon, p) > kZeroProbability;
        bool seen_two = probability_of(two_photon, p) > kZeroProbability;
        if (seen_one && !seen_two) {
            result.one_photon_set.insert(p);
        } else if (seen_two && !seen_one) {
            result.two_photon_set.insert(p);
        } else if (seen_one && seen_two) {
            result.failure_set.insert(p);
        }
    }
    return result;
}

}  // namespace sprcheck
