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

// y-adic Hensel lifting shared by the general factoring path and the
// Kasami fast path.

#pragma once

#include <vector>

#include "fermat/bipoly.hpp"

namespace fermat::detail {

// Truncated power series in y with coefficients in F[x]; s[k] multiplies
// y^k.
using Series = std::vector<Coeffs>;

Series to_series(const BiPoly& f);
BiPoly from_series(const Field& F, const Series& s);
// a * b mod y^n.
Series series_mul(const Field& F, const Series& a, const Series& b, int n);

// Lifts f(x, 0) = prod(factors) to f = prod(lifted) mod y^n. Requires f
// monic in x (s[0] monic of degree D and deg s[k] < D for k > 0) and the
// factors monic and pairwise coprime. Each lifted factor is monic in x with
// the same degree as its start.
std::vector<Series> hensel_lift(const Field& F, const Series& f,
                                const std::vector<Coeffs>& factors, int n);

}  // namespace fermat::detail
