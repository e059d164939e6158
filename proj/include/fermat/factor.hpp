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

#include "fermat/bipoly.hpp"
#include "fermat/mpoly.hpp"

namespace fermat {

// unit * prod(factor^multiplicity) over field. Factors are irreducible over
// field, normalized (graded-lex leading coefficient 1) and sorted by total
// degree, then serialized form.
struct Factorization {
  Field field;
  uint32_t unit = 0;
  std::vector<std::pair<MPoly, int>> factors;

  MPoly expand() const;
  // Number of irreducible factors counted with multiplicity.
  int count() const;
};

inline constexpr uint64_t kDefaultBudget = uint64_t{1} << 24;

struct FactorOptions {
  uint64_t seed = 0;
  // Upper bound on recombination candidates tried per squarefree part.
  uint64_t budget = kDefaultBudget;
};

// Recombination ran past the budget. Carries the partial state.
class BudgetExceeded : public CapacityError {
 public:
  BudgetExceeded(const std::string& what, uint64_t budget, int modular_factors,
                 int factors_found)
      : CapacityError(what),
        budget_(budget),
        modular_factors_(modular_factors),
        factors_found_(factors_found) {}
  uint64_t budget() const { return budget_; }
  int modular_factors() const { return modular_factors_; }
  int factors_found() const { return factors_found_; }

 private:
  uint64_t budget_;
  int modular_factors_;
  int factors_found_;
};

// Complete factorization of a polynomial in x, y over its field. Throws
// InvalidArgument for zero or when z occurs, CapacityError when the total
// degree exceeds 256 or a needed working extension exceeds GF(2^32).
Factorization bivar_factor(const MPoly& f, const FactorOptions& opts = {});

// phi_t(x, y) for t = 2^(2k) - 2^k + 1 over GF(2^k) as the product of the
// 2^k - 2 factors P_a with P_a(x, 0) = (x + a)^(2^k + 1), a in GF(2^k) - GF(2),
// obtained by lifting the y = 0 blocks. Throws InvalidArgument unless
// 2 <= k <= 4, InvariantViolation if the lifted product is not phi_t.
// Factors are sorted by a.
Factorization kasami_lift_factor(int k);

// The element a of each kasami factor, in factor order.
std::vector<uint32_t> kasami_roots(int k);

struct AbsIrredResult {
  bool absolutely_irreducible = false;
  // Set when some prime extension could not be examined.
  bool capacity_skipped = false;
  // Primes p with f irreducible over GF(2^(m*p)), by factoring.
  std::vector<int> tested_primes;
  // Primes excluded by a smooth point over GF(2^(m*j)): the field of
  // definition of the absolute components has degree dividing j.
  std::vector<std::pair<int, std::vector<uint32_t>>> point_certificates;
  std::vector<int> skipped_primes;
  // The splitting found, over the base field or an extension.
  std::optional<Factorization> splitting;
  std::string summary;
};

struct AbsIrredOptions {
  FactorOptions factor;
  // Use smooth points to exclude primes before factoring over extensions.
  bool point_certificates = true;
};

// Irreducible over the base field and over GF(2^(m*p)) for every prime p
// dividing the total degree. Throws InvalidArgument for constant f.
AbsIrredResult absolutely_irreducible(const MPoly& f,
                                      const AbsIrredOptions& opts = {});

}  // namespace fermat
