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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fermat/gf2m.hpp"

namespace fermat {

// Dense coefficient vector, index = exponent. Normalized vectors carry no
// trailing zeros; the zero polynomial is empty.
using Coeffs = std::vector<uint32_t>;

// Kernels over a Field. Inputs are assumed normalized and reduced into the
// field; outputs are normalized.
namespace upoly {

void trim(Coeffs& a);
inline int deg(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }
inline uint32_t lead(const Coeffs& a) { return a.empty() ? 0 : a.back(); }

Coeffs add(const Coeffs& a, const Coeffs& b);
void add_to(Coeffs& acc, const Coeffs& b);
// acc += c * x^shift * b
void axpy(const Field& F, Coeffs& acc, uint32_t c, const Coeffs& b,
          std::size_t shift = 0);
Coeffs scale(const Field& F, const Coeffs& a, uint32_t c);
Coeffs mul(const Field& F, const Coeffs& a, const Coeffs& b);
Coeffs pow(const Field& F, const Coeffs& a, uint64_t e);

// Throws DivisionByZero for b == 0.
void divrem(const Field& F, const Coeffs& a, const Coeffs& b, Coeffs* q,
            Coeffs* r);
Coeffs rem(const Field& F, const Coeffs& a, const Coeffs& b);
Coeffs quo(const Field& F, const Coeffs& a, const Coeffs& b);
std::optional<Coeffs> divide_exact(const Field& F, const Coeffs& a,
                                   const Coeffs& b);

Coeffs monic(const Field& F, const Coeffs& a);
// Monic gcd; gcd(0, 0) = 0.
Coeffs gcd(const Field& F, const Coeffs& a, const Coeffs& b);
// Returns monic g = s*a + t*b.
Coeffs xgcd(const Field& F, const Coeffs& a, const Coeffs& b, Coeffs* s,
            Coeffs* t);

Coeffs derivative(const Coeffs& a);
// Square root of a polynomial whose derivative vanishes.
Coeffs sqrt(const Field& F, const Coeffs& a);

Coeffs mulmod(const Field& F, const Coeffs& a, const Coeffs& b,
              const Coeffs& m);
Coeffs powmod(const Field& F, const Coeffs& a, uint64_t e, const Coeffs& m);
// a^(2^k) mod m.
Coeffs frobmod(const Field& F, const Coeffs& a, int k, const Coeffs& m);

uint32_t eval(const Field& F, const Coeffs& a, uint32_t x);
// a(x + c).
Coeffs shift(const Field& F, const Coeffs& a, uint32_t c);
// Coefficient-wise image under a field morphism.
Coeffs map(const Coeffs& a, const Embedding& e);

bool is_squarefree(const Field& F, const Coeffs& a);

// Canonical order: degree first, then coefficients from the top down.
bool canonical_less(const Coeffs& a, const Coeffs& b);

std::string to_string(const Coeffs& a, char var = 'x');

}  // namespace upoly

// A univariate polynomial with its field.
struct UPoly {
  Field field;
  Coeffs coeffs;

  int degree() const { return upoly::deg(coeffs); }
  std::string to_string(char var = 'x') const {
    return upoly::to_string(coeffs, var);
  }
  friend bool operator==(const UPoly& a, const UPoly& b) {
    return a.field == b.field && a.coeffs == b.coeffs;
  }
};

// unit * prod(factor^multiplicity); factors monic, irreducible, sorted
// canonically.
struct UFactorization {
  Field field;
  uint32_t unit = 0;
  std::vector<std::pair<Coeffs, int>> factors;

  Coeffs expand() const;
};

// Squarefree -> distinct-degree -> equal-degree factorization. The seed
// drives the equal-degree splitting; sorting makes the output independent
// of it. Throws InvalidArgument for f == 0.
UFactorization univar_factor(const UPoly& f, uint64_t seed = 0);

// Distinct roots of f in its field, ascending.
std::vector<uint32_t> find_roots(const Field& F, const Coeffs& f,
                                 uint64_t seed = 0);

}  // namespace fermat
