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

#ifndef SPRCHECK_NUMERIC_FORMAT_H
#define SPRCHECK_NUMERIC_FORMAT_H

#include <string>

namespace sprcheck {

/// 17 significant digits, '.' separator, independent of the global locale.
std::string format_double(double value);

/// Shortest string that reads back to the same double. For console text.
std::string format_shortest(double value);

}  // namespace sprcheck

#endif
