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

#ifndef SPRCHECK_CLI_REPORTS_H
#define SPRCHECK_CLI_REPORTS_H

#include <string>
#include <vector>

#include "json.hpp"
#include "sprcheck/cascade.h"
#include "sprcheck/fock.h"
#include "sprcheck/measurement.h"
#include "sprcheck/optimizer.h"
#include "sprcheck/spr_checker.h"

namespace sprcheck::cli {

// Complex numbers serialize as [re, im]; monomials as exponent arrays;
// matrix elements as one-based [row, col].

nlohmann::json complex_to_json(Complex c);
nlohmann::json matrix_to_json(const ComplexMatrix &m);
nlohmann::json element_to_json(MatrixElement e);

/// Canonical terms plus the amplitude and probability of every occupation in
/// the output space (zero entries included).
nlohmann::json polynomial_report(const FockPolynomial &poly, const ModeMonomial &input_occupation);

nlohmann::json distribution_to_json(const SignatureDistribution &dist);
nlohmann::json classification_to_json(const SignatureClassification &c);
std::string distribution_csv(const SignatureDistribution &dist);

nlohmann::json certificate_to_json(const InfeasibilityCertificate &cert);
std::string certificate_to_text(const InfeasibilityCertificate &cert);
nlohmann::json falsification_to_json(const FalsificationReport &report);

nlohmann::json params_to_json(const UnitaryParametrization &p);
nlohmann::json sweep_to_json(const std::vector<SweepRow> &rows);
/// epsilon,best_objective,constraint_residual,feasible,evaluations,best_restart
std::string sweep_csv(const std::vector<SweepRow> &rows);

nlohmann::json cascade_to_json(const std::vector<CascadeReport> &rows);
/// D,n,eta,p_all_distinct,p_collision,p_miscount
std::string cascade_csv(const std::vector<CascadeReport> &rows);

}  // namespace sprcheck::cli

#endif
