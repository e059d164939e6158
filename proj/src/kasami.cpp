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

#include "fermat/errors.hpp"
#include "fermat/factor.hpp"
#include "fermat/phi.hpp"
#include "hensel.hpp"

namespace fermat {

std::vector<uint32_t> kasami_roots(int k) {
  if (k < 2 || k > 4) throw InvalidArgument("kasami factoring needs 2 <= k <= 4");
  std::vector<uint32_t> out;
  for (uint32_t a = 2; a < (1u << k); ++a) out.push_back(a);
  return out;
}

Factorization kasami_lift_factor(int k) {
  const std::vector<uint32_t> roots = kasami_roots(k);
  const Field E = make_field(k);
  const int t = (1 << (2 * k)) - (1 << k) + 1;
  const int block = (1 << k) + 1;
  const BiPoly phi = BiPoly::from_mpoly(affine_part(build_phi_j(t, E)));
  const int D = t - 3;
  if (phi.total_degree() != D || phi.deg_x() != D || phi.rows[D] != Coeffs{1})
    throw InvariantViolation("phi_t is not monic in x of degree t - 3");

  // phi_t(x, 0) = prod (x + a)^block over a in GF(2^k) - GF(2).
  std::vector<Coeffs> blocks;
  Coeffs prod{1};
  for (uint32_t a : roots) {
    blocks.push_back(upoly::pow(E, Coeffs{a, 1}, block));
    prod = upoly::mul(E, prod, blocks.back());
  }
  if (prod != phi.eval_y(0))
    throw InvariantViolation("phi_t(x, 0) is not the product of the blocks");

  // Each factor has y-degree at most block, so this precision recovers it.
  const auto lifted =
      detail::hensel_lift(E, detail::to_series(phi), blocks, block + 1);

  Factorization out;
  out.field = E;
  out.unit = 1;
  BiPoly check = BiPoly::constant(E, 1);
  for (const auto& s : lifted) {
    const BiPoly p = detail::from_series(E, s);
    if (p.total_degree() != block)
      throw InvariantViolation("lifted block has the wrong total degree");
    check = check * p;
    out.factors.emplace_back(p.to_mpoly(), 1);
  }
  if (!(check == phi))
    throw InvariantViolation("lifted blocks do not multiply back to phi_t");
  return out;
}

}  // namespace fermat
