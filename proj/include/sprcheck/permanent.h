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

#ifndef SPRCHECK_PERMANENT_H
#define SPRCHECK_PERMANENT_H

#include "sprcheck/fock.h"
#include "sprcheck/unitary.h"

namespace sprcheck {

/// Permanent via Ryser's inclusion-exclusion formula with Gray-code subset
/// updates, O(2^n n). Throws InvalidInput if `m` is not square and non-empty.
Complex permanent(const ComplexMatrix &m);

/// Permanent by expansion over all n! permutations. Only for small n.
Complex permanent_naive(const ComplexMatrix &m);

/// <output| U |input> computed as perm(U[input rows, output cols]) with rows
/// and columns repeated by occupation, divided by sqrt(prod in! prod out!).
Complex transition_amplitude(const InterferometerUnitary &u, const ModeMonomial &input, const ModeMonomial &output);

}  // namespace sprcheck

#endif
