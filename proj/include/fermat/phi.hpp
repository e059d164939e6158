// Copyright 2026 The fermat-apn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <string_view>

#include "fermat/mpoly.hpp"

namespace fermat {

// Sparse univariate polynomial f = sum a_j x^j, keyed by exponent. Zero
// coefficients are allowed and ignored.
using CoeffMap = std::map<int, uint32_t>;

// Parses "d:hex,d:hex,..." (for example "13:1,7:1").
CoeffMap parse_coeff_map(const Field& field, std::string_view text);
std::string format_coeff_map(const CoeffMap& f);

// phi_j = (x^j + y^j + z^j + (x+y+z)^j) / ((x+y)(x+z)(y+z)), homogeneous of
// degree j - 3 or zero. Memoized per (j, field). Throws InvalidArgument for
// j < 3.
MPoly build_phi_j(int j, const Field& field);

struct PhiOptions {
  // Skip the second construction and the cross-check.
  bool fast = false;
};

// phi of f in x, y, z. Built from the numerator f(x)+f(y)+f(z)+f(x+y+z) and
// from the sum of a_j phi_j; the two must agree (InvariantViolation
// otherwise). Throws InvalidArgument when a_j = 0 for all j >= 3.
MPoly build_phi_f(const CoeffMap& f, const Field& field,
                  const PhiOptions& opts = {});

// phi(x, y) = phi(x, y, 1).
MPoly affine_part(const MPoly& phi);

}  // namespace fermat
