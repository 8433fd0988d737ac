// Copyright 2026 The matqsym Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <vector>

#include "matqsym/integer.hpp"
#include "matqsym/intpoly.hpp"

namespace matqsym {

using IntMatrix = std::vector<std::vector<Int>>;  // row-major

// Unique x with sum_j x_j * columns[j] = target over Q; nullopt when the
// columns are dependent or target is outside their span.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<std::vector<Int>>& columns,
                                                   const std::vector<Int>& target);

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
bool is_lower_unitriangular(const IntMatrix& a);
bool is_upper_unitriangular(const IntMatrix& a);

}  // namespace matqsym
