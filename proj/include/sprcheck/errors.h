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

#ifndef SPRCHECK_ERRORS_H
#define SPRCHECK_ERRORS_H

#include <stdexcept>
#include <string>

namespace sprcheck {

/// Malformed or contract-violating input (wrong dimensions, negative counts,
/// non-unitary matrices, unparseable scenarios).
class InvalidInput : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Well-formed input outside the regime a computation supports, e.g. too many
/// modes for exhaustive signature enumeration or N > M for the deduction.
class UnsupportedParameters : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// A computed result failed an internal cross-check (certificate verification,
/// uniqueness of a surviving term, probability normalization).
class InconsistencyError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace sprcheck

#endif
