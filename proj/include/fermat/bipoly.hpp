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
#include <string>
#include <vector>

#include "fermat/mpoly.hpp"
#include "fermat/upoly.hpp"

namespace fermat {

// Dense bivariate polynomial: rows[i] is the coefficient of x^i as a
// polynomial in y. Trailing zero rows are trimmed. This is the working
// representation of the gcd and factorization engines; MPoly remains the
// interchange type.
struct BiPoly {
  Field field;
  std::vector<Coeffs> rows;

  BiPoly() = default;
  explicit BiPoly(Field f) : field(std::move(f)) {}

  static BiPoly constant(const Field& f, uint32_t c);
  static BiPoly from_mpoly(const MPoly& p);  // throws if z occurs
  MPoly to_mpoly() const;

  bool is_zero() const { return rows.empty(); }
  bool is_constant() const;
  int deg_x() const { return static_cast<int>(rows.size()) - 1; }
  int deg_y() const;
  int total_degree() const;
  uint32_t coeff(int i, int j) const;
  void set(int i, int j, uint32_t c);
  void trim();

  // Graded-lex leading coefficient (highest total degree, then x).
  uint32_t leading_coeff() const;
  BiPoly normalized() const;

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly scale(uint32_t c) const;
  bool operator==(const BiPoly& o) const {
    return field == o.field && rows == o.rows;
  }

  BiPoly transpose() const;
  Coeffs eval_y(uint32_t y0) const;  // polynomial in x
  Coeffs eval_x(uint32_t x0) const;  // polynomial in y
  // f(x, y + c)
  BiPoly shift_y(uint32_t c) const;
  // f(x, y + lambda * x)
  BiPoly shear(uint32_t lambda) const;
  BiPoly derivative_x() const;
  BiPoly derivative_y() const;
  // Square root when both partial derivatives vanish.
  BiPoly sqrt() const;
  BiPoly map(const Embedding& e) const;
  std::optional<BiPoly> descend(const Embedding& e) const;
  BiPoly frobenius(int k) const;
  // Top homogeneous form evaluated at (1, t): a polynomial in t.
  Coeffs top_form_at_x1() const;

  std::string to_string() const { return to_mpoly().to_string(); }
};

// Quotient when b divides a exactly (division in x with exact division of
// the y-coefficients), nullopt otherwise. Throws DivisionByZero for b == 0.
std::optional<BiPoly> bi_divide_exact(const BiPoly& a, const BiPoly& b);

// Normalized gcd (graded-lex leading coefficient 1), computed with y as the
// main variable over coefficients in the x ring by dense evaluation and
// interpolation at x-points of the field or of an extension, with
// primitive-part and trial-division checks.
BiPoly bi_gcd(const BiPoly& a, const BiPoly& b);

}  // namespace fermat
