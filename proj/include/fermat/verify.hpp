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

#include "fermat/factor.hpp"
#include "fermat/phi.hpp"
#include "fermat/report.hpp"

namespace fermat {

struct VerifyOptions {
  // Unlocks k = 4 and phi_d sweeps past d = 100.
  bool extended = false;
  FactorOptions factor;
  // Worker threads for sweeps; results do not depend on it.
  int threads = 1;
};

// Factors in canonical serialization, each tagged with its field.
Json factorization_json(const Factorization& f);
Json abs_irred_json(const AbsIrredResult& r);

bool is_gold(int d);     // d = 2^k + 1, k >= 1
bool is_kasami(int d);   // d = 2^(2k) - 2^k + 1, k >= 2
int kasami_exponent(int k);

// Factor count 2^k - 2, degrees 2^k + 1, absolute irreducibility of each
// factor over GF(2^k), P_a(x, 0) = (x + a)^(2^k + 1) and exact product.
// k = 1 is skipped (no a), k = 4 needs extended.
Report verify_kasami_structure(int k, const VerifyOptions& opts = {});

// f = x^t + h with t = 2^(2k) - 2^k + 1 and deg h = 3 mod 4: phi(x, y) is
// absolutely irreducible, and (1, 1) is off phi_d.
Report verify_theorem_3mod4(int k, const CoeffMap& h,
                            const VerifyOptions& opts = {},
                            const Field& field = Field());

// f = x^t + h with deg h = 5 mod 8: when d < 2^(2k) - 3 * 2^k - 1 and
// gcd(phi_t, phi_d) = 1, phi(x, y) is absolutely irreducible. Unmet
// hypotheses give a skip, never a fail. Also checks m_(1,1)(phi_d) = 2.
Report verify_theorem_5mod8(int k, const CoeffMap& h,
                            const VerifyOptions& opts = {},
                            const Field& field = Field());

// Absolute irreducibility of phi_d over GF(2) for odd d in [lo, hi],
// against the expectation: reducible exactly for Gold and Kasami-Welch d
// below 100, and for d = 205.
Report verify_phi_d_irreducibility(int lo, int hi,
                                   const VerifyOptions& opts = {});

// Given a hypothetical factorization phi = P * Q, checks the homogeneous
// component equations: the top parts multiply to the top of P * Q, the
// parts strictly between the top and the second degree vanish, and the
// second part P_s Q_(t-e) + P_(s-e) Q_t relates to phi_d. Missing parts
// are zero. e = deg(P*Q) + 3 - d.
Report homogeneous_system_probe(const MPoly& P, const MPoly& Q, int d);

}  // namespace fermat
