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

#include <optional>
#include <utility>
#include <vector>

#include "fermat/factor.hpp"
#include "fermat/mpoly.hpp"
#include "fermat/report.hpp"

namespace fermat {

// An affine point with coordinates in field.
struct Point {
  Field field;
  uint32_t x = 0, y = 0;
};

struct SingularityReport {
  Point point;
  int multiplicity = 0;
  // Lowest nonzero homogeneous part of f(x + px, y + py), over point.field.
  // The constant f(p) when the point is off the curve.
  MPoly tangent_cone;
  // Linear factors of the tangent cone over split_field, with
  // multiplicities. Empty when multiplicity is 0.
  Field split_field;
  std::vector<std::pair<MPoly, int>> tangent_lines;
  bool distinct_lines = false;
};

// f is mapped into point.field, which must contain its field.
SingularityReport multiplicity_at(const MPoly& f, const Point& p);

struct EdCount {
  int count = 0;
  bool odd() const { return count % 2 == 1; }
};

// Terms x^m y^m with m >= 1.
EdCount ed_term_count(const MPoly& f);

struct QGroup {
  // Frobenius orbits of the roots a whose P_a make up q (and its mirror).
  std::vector<std::vector<uint32_t>> orbits;
  MPoly q;                      // over GF(2)
  std::optional<MPoly> mirror;  // q(y, x) when q is not symmetric
  MPoly q_prime;                // q, or q * q(y, x)
  bool symmetric = false;
};

// Groups the kasami factors of phi_t over GF(2^k): products over Frobenius
// orbits, then mirror pairs. Throws InvariantViolation when an orbit product
// is not over GF(2), a mirror is missing, or the q_prime do not multiply to
// phi_t.
std::vector<QGroup> group_q_factors(int k);

// Each kasami factor passes through (1, 1) with multiplicity 1, the tangent
// lines there are pairwise distinct and their number is m_(1,1)(phi_t).
// Throws InvalidArgument unless 2 <= k <= 4.
Report transversality_check(int k);

}  // namespace fermat
