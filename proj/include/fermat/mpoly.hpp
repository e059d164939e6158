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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fermat/errors.hpp"
#include "fermat/gf2m.hpp"

namespace fermat {

enum class Var { kX = 0, kY = 1, kZ = 2 };

struct Monomial {
  uint32_t x = 0, y = 0, z = 0;

  uint32_t total() const { return x + y + z; }
  uint32_t exponent(Var v) const {
    return v == Var::kX ? x : v == Var::kY ? y : z;
  }
  bool divides(const Monomial& o) const {
    return x <= o.x && y <= o.y && z <= o.z;
  }
  Monomial operator*(const Monomial& o) const {
    return {x + o.x, y + o.y, z + o.z};
  }
  // Requires divides(o) from the right-hand side.
  Monomial operator/(const Monomial& o) const {
    return {x - o.x, y - o.y, z - o.z};
  }
  bool operator==(const Monomial&) const = default;
};

// Graded lexicographic order: total degree, then x, then y.
inline std::strong_ordering grlex(const Monomial& a, const Monomial& b) {
  if (auto c = a.total() <=> b.total(); c != 0) return c;
  if (auto c = a.x <=> b.x; c != 0) return c;
  return a.y <=> b.y;
}

struct Term {
  Monomial mono;
  uint32_t coeff = 0;
  bool operator==(const Term&) const = default;
};

// Sparse polynomial in x, y, z over a Field. Terms are kept in descending
// graded-lex order with no zero coefficients.
class MPoly {
 public:
  // Exponents per variable are capped so monomials pack into 64 bits.
  static constexpr uint32_t kMaxExponent = (1u << 21) - 1;

  MPoly() = default;
  explicit MPoly(Field field) : field_(std::move(field)) {}

  static MPoly constant(const Field& field, uint32_t c);
  static MPoly variable(const Field& field, Var v);
  static MPoly monomial(const Field& field, Monomial m, uint32_t c = 1);
  // Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  static MPoly from_terms(const Field& field, std::vector<Term> terms);

  // Text form: terms joined by '+', each "coeff*x^a*y^b*z^c" with the
  // coefficient in hex (omitted when 1 on a non-constant monomial) and
  // exponents of 1 or 0 elided. The parser also accepts '·', whitespace,
  // repeated factors and unordered terms.
  static MPoly parse(const Field& field, std::string_view text);
  std::string to_string() const;

  const Field& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  // -1 for the zero polynomial.
  int total_degree() const;
  int degree(Var v) const;
  uint32_t coeff(const Monomial& m) const;
  // Leading term in graded-lex order; the polynomial must be nonzero.
  const Term& leading() const { return terms_.front(); }
  uint32_t constant_term() const;

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const { return *this + o; }
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly scale(uint32_t c) const;
  MPoly pow(uint64_t e) const;

  // Leading graded-lex coefficient scaled to 1 (zero stays zero).
  MPoly normalized() const;

  // Coefficient-wise image under a field embedding.
  MPoly map(const Embedding& e) const;
  // Inverse of map; nullopt when a coefficient is outside the subfield.
  std::optional<MPoly> descend(const Embedding& e) const;
  // Coefficient-wise Frobenius a -> a^(2^k).
  MPoly frobenius(int k = 1) const;

  uint32_t eval(uint32_t x, uint32_t y, uint32_t z = 0) const;

  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

 private:
  Field field_;
  std::vector<Term> terms_;
};

// Graded-lex comparison of whole polynomials via their serialized forms;
// used for canonical factor ordering.
bool canonical_less(const MPoly& a, const MPoly& b);

// Non-exact division; carries the nonzero remainder.
class NonExactDivision : public Error {
 public:
  NonExactDivision(const std::string& what, MPoly remainder)
      : Error(what), remainder_(std::move(remainder)) {}
  const MPoly& remainder() const { return remainder_; }

 private:
  MPoly remainder_;
};

enum class PolyOp { kAdd, kMul };

// Throws ContextMismatch when the fields differ.
MPoly poly_arith(const MPoly& f, const MPoly& g, PolyOp op);

// q with f = q * g. Throws DivisionByZero for g == 0 and NonExactDivision
// when the graded-lex division leaves a remainder.
MPoly divide_exact(const MPoly& f, const MPoly& g);

// f with the variable v replaced by expr.
MPoly substitute(const MPoly& f, Var v, const MPoly& expr);

// f(y, x, z).
MPoly swap_xy(const MPoly& f);

struct HomogeneousDecomposition {
  // Descending degree; only nonzero parts.
  std::vector<std::pair<int, MPoly>> parts;

  // The part of the given degree, zero when absent.
  MPoly part(const Field& field, int degree) const;
  MPoly sum(const Field& field) const;
};

HomogeneousDecomposition homogeneous_parts(const MPoly& f);
bool is_homogeneous(const MPoly& f);

// f(x, y) == f(y, x). Throws InvalidArgument if z occurs.
bool is_symmetric(const MPoly& f);

// Normalized gcd of two polynomials in x, y. Throws InvalidArgument if z
// occurs or both inputs are zero.
MPoly gcd_bivariate(const MPoly& f, const MPoly& g);

}  // namespace fermat
