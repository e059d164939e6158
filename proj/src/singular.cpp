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

#include "fermat/singular.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fermat/bipoly.hpp"
#include "fermat/errors.hpp"
#include "fermat/phi.hpp"

namespace fermat {

namespace {

std::string hex(const Field& F, uint32_t v) { return FFElt(F, v).to_hex(); }

MPoly linear_form(const Field& F, uint32_t cx, uint32_t cy) {
  return MPoly::from_terms(F, {{{1, 0, 0}, cx}, {{0, 1, 0}, cy}});
}

}  // namespace

SingularityReport multiplicity_at(const MPoly& f, const Point& p) {
  const Field& K = p.field;
  BiPoly b = BiPoly::from_mpoly(f);
  if (f.field() != K) b = b.map(embed(f.field(), K));
  b = b.shift_y(p.y).transpose().shift_y(p.x).transpose();

  SingularityReport r;
  r.point = p;
  r.split_field = K;
  if (b.is_zero()) throw InvalidArgument("multiplicity of the zero polynomial");
  int mu = b.total_degree();
  for (int i = 0; i <= b.deg_x(); ++i)
    for (std::size_t j = 0; j < b.rows[i].size(); ++j)
      if (b.rows[i][j]) mu = std::min(mu, i + static_cast<int>(j));
  r.multiplicity = mu;
  std::vector<Term> cone;
  Coeffs u(mu + 1, 0);  // cone(t, 1)
  for (int i = 0; i <= std::min(mu, b.deg_x()); ++i) {
    const uint32_t c = b.coeff(i, mu - i);
    if (!c) continue;
    cone.push_back({{static_cast<uint32_t>(i), static_cast<uint32_t>(mu - i), 0}, c});
    u[i] = c;
  }
  r.tangent_cone = MPoly::from_terms(K, cone);
  if (mu == 0) return r;

  upoly::trim(u);
  const int a = upoly::deg(u);
  const auto uf = univar_factor({K, u});
  int s = 1;
  for (const auto& [q, e] : uf.factors) s = std::lcm(s, upoly::deg(q));
  if (K.degree() * s > 32)
    throw CapacityError("tangent lines need GF(2^" +
                        std::to_string(K.degree() * s) + ")");
  const Field L = s == 1 ? K : extension_field(K, s);
  const Embedding to_l = embed(K, L);
  r.split_field = L;
  // cone = lc * y^(mu - a) * prod (x + r y) over the roots r of u.
  if (mu > a) r.tangent_lines.emplace_back(linear_form(L, 0, 1), mu - a);
  for (const auto& [q, e] : uf.factors)
    for (uint32_t root : find_roots(L, upoly::map(q, to_l)))
      r.tangent_lines.emplace_back(linear_form(L, 1, root), e);
  std::sort(r.tangent_lines.begin(), r.tangent_lines.end(),
            [](const auto& x, const auto& y) {
              return canonical_less(x.first, y.first);
            });
  r.distinct_lines = std::all_of(r.tangent_lines.begin(), r.tangent_lines.end(),
                                 [](const auto& l) { return l.second == 1; });
  return r;
}

EdCount ed_term_count(const MPoly& f) {
  EdCount c;
  for (const auto& t : f.terms())
    if (t.mono.x == t.mono.y && t.mono.x >= 1 && t.mono.z == 0) ++c.count;
  return c;
}

std::vector<QGroup> group_q_factors(int k) {
  const Factorization fac = kasami_lift_factor(k);
  const std::vector<uint32_t> roots = kasami_roots(k);
  const Field& E = fac.field;
  const Field F2 = make_field(1);
  const Embedding down = embed(F2, E);

  std::vector<std::vector<uint32_t>> orbits;
  std::vector<MPoly> qs;
  std::set<uint32_t> seen;
  for (uint32_t a : roots) {
    if (seen.count(a)) continue;
    std::vector<uint32_t> orbit;
    MPoly q = MPoly::constant(E, 1);
    for (const auto& b : frobenius_orbit(FFElt(E, a))) {
      orbit.push_back(b.value());
      seen.insert(b.value());
      q *= fac.factors[b.value() - roots.front()].first;
    }
    auto q2 = q.descend(down);
    if (!q2)
      throw InvariantViolation("orbit product for a = " + hex(E, a) +
                               " is not over GF(2)");
    orbits.push_back(orbit);
    qs.push_back(*q2);
  }

  std::vector<QGroup> out;
  std::vector<bool> used(qs.size(), false);
  MPoly prod = MPoly::constant(F2, 1);
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    QGroup g;
    g.orbits.push_back(orbits[i]);
    g.q = qs[i];
    g.symmetric = is_symmetric(qs[i]);
    g.q_prime = qs[i];
    if (!g.symmetric) {
      const MPoly m = swap_xy(qs[i]);
      auto it = std::find(qs.begin(), qs.end(), m);
      if (it == qs.end() || used[it - qs.begin()])
        throw InvariantViolation("mirror of a non-symmetric Q is missing");
      used[it - qs.begin()] = true;
      g.orbits.push_back(orbits[it - qs.begin()]);
      g.mirror = m;
      g.q_prime = qs[i] * m;
    }
    prod *= g.q_prime;
    out.push_back(std::move(g));
  }
  const int t = (1 << (2 * k)) - (1 << k) + 1;
  if (prod != affine_part(build_phi_j(t, F2)))
    throw InvariantViolation("Q' groups do not multiply to phi_t");
  return out;
}

Report transversality_check(int k) {
  if (k < 2 || k > 4)
    throw InvalidArgument("transversality needs 2 <= k <= 4 (k = 1 has no components)");
  const Factorization fac = kasami_lift_factor(k);
  const std::vector<uint32_t> roots = kasami_roots(k);
  const Field& E = fac.field;
  const int t = (1 << (2 * k)) - (1 << k) + 1;
  const Point p{E, 1, 1};

  Report rep;
  rep.name = "transversality";
  rep.hypotheses = {{"k", k}, {"t", t}, {"field", E.to_string()},
                    {"point", "(1,1)"}};
  Json comps = Json::array();
  std::vector<std::string> failures;
  std::vector<MPoly> lines;
  int total = 0;
  MPoly cone_product = MPoly::constant(E, 1);
  for (std::size_t i = 0; i < fac.factors.size(); ++i) {
    const auto s = multiplicity_at(fac.factors[i].first, p);
    Json c;
    c["alpha"] = hex(E, roots[i]);
    c["multiplicity"] = s.multiplicity;
    c["tangent_line"] = s.tangent_cone.normalized().to_string();
    comps.push_back(c);
    total += s.multiplicity;
    if (s.multiplicity != 1)
      failures.push_back("P_" + hex(E, roots[i]) + " has multiplicity " +
                         std::to_string(s.multiplicity) + " at (1,1)");
    lines.push_back(s.tangent_cone.normalized());
    cone_product *= s.tangent_cone;
  }
  bool distinct = true;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (lines[i] == lines[j]) {
        distinct = false;
        failures.push_back("P_" + hex(E, roots[i]) + " and P_" +
                           hex(E, roots[j]) + " share the tangent " +
                           lines[i].to_string());
      }
  const auto whole = multiplicity_at(affine_part(build_phi_j(t, E)), p);
  if (whole.multiplicity != total ||
      whole.multiplicity != static_cast<int>(roots.size()))
    failures.push_back("m_(1,1)(phi_t) = " + std::to_string(whole.multiplicity) +
                       ", components contribute " + std::to_string(total));
  // The tangent cone of a product is the product of the tangent cones.
  const bool cone_ok =
      whole.tangent_cone.normalized() == cone_product.normalized();
  if (!cone_ok) failures.push_back("tangent cone of phi_t is not the product");

  rep.witnesses["components"] = comps;
  rep.witnesses["distinct_tangents"] = distinct;
  rep.witnesses["phi_multiplicity"] = whole.multiplicity;
  rep.witnesses["phi_tangent_cone"] = whole.tangent_cone.to_string();
  if (!failures.empty()) {
    rep.verdict = Verdict::kFail;
    rep.witnesses["counterexample"] = failures;
  }
  return rep;
}

}  // namespace fermat
