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

// Univariate factorization over GF(2^m): squarefree splitting, distinct-degree
// and trace-based equal-degree factorization.

#include <algorithm>
#include <map>
#include <random>

#include "fermat/errors.hpp"
#include "fermat/upoly.hpp"

namespace fermat {

using namespace upoly;

namespace {

Coeffs random_poly(const Field& F, int degree_bound, std::mt19937_64& rng) {
  Coeffs r(degree_bound);
  for (auto& c : r) c = static_cast<uint32_t>(rng()) & F.mask();
  trim(r);
  return r;
}

// g is a monic product of distinct irreducibles of degree d.
void equal_degree_split(const Field& F, const Coeffs& g, int d,
                        std::mt19937_64& rng, std::vector<Coeffs>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  const int trace_len = F.degree() * d;
  for (;;) {
    Coeffs v = random_poly(F, deg(g), rng);
    if (deg(v) < 1) continue;
    // T(v) = v + v^2 + ... + v^(2^(md-1)) mod g
    Coeffs acc = v;
    Coeffs cur = v;
    for (int i = 1; i < trace_len; ++i) {
      cur = frobmod(F, cur, 1, g);
      add_to(acc, cur);
    }
    Coeffs w = gcd(F, g, acc);
    if (deg(w) > 0 && deg(w) < deg(g)) {
      equal_degree_split(F, w, d, rng, out);
      equal_degree_split(F, quo(F, g, w), d, rng, out);
      return;
    }
  }
}

// f monic squarefree.
void distinct_degree(const Field& F, Coeffs f, std::mt19937_64& rng,
                     std::vector<Coeffs>& out) {
  const int m = F.degree();
  Coeffs x{0, 1};
  Coeffs h = rem(F, x, f);
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = frobmod(F, h, m, f);
    Coeffs g = gcd(F, f, add(h, x));
    if (deg(g) > 0) {
      equal_degree_split(F, g, d, rng, out);
      f = quo(F, f, g);
      h = rem(F, h, f);
    }
  }
  if (deg(f) > 0) out.push_back(f);
}

// f monic; appends (factor, multiplicity) pairs, unmerged.
void factor_rec(const Field& F, const Coeffs& f, int mult,
                std::mt19937_64& rng,
                std::vector<std::pair<Coeffs, int>>& out) {
  if (deg(f) <= 0) return;
  if (deg(f) == 1) {
    out.emplace_back(f, mult);
    return;
  }
  Coeffs d = derivative(f);
  if (d.empty()) {
    factor_rec(F, upoly::sqrt(F, f), 2 * mult, rng, out);
    return;
  }
  Coeffs g = gcd(F, f, d);
  if (deg(g) > 0) {
    factor_rec(F, g, mult, rng, out);
    factor_rec(F, quo(F, f, g), mult, rng, out);
    return;
  }
  std::vector<Coeffs> parts;
  distinct_degree(F, f, rng, parts);
  for (auto& p : parts) out.emplace_back(std::move(p), mult);
}

}  // namespace

Coeffs UFactorization::expand() const {
  Coeffs r{unit};
  for (const auto& [p, e] : factors) r = mul(field, r, upoly::pow(field, p, e));
  return r;
}

UFactorization univar_factor(const UPoly& f, uint64_t seed) {
  if (f.coeffs.empty())
    throw InvalidArgument("cannot factor the zero polynomial");
  const Field& F = f.field;
  UFactorization out;
  out.field = F;
  out.unit = lead(f.coeffs);
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Coeffs, int>> raw;
  factor_rec(F, monic(F, f.coeffs), 1, rng, raw);
  std::map<Coeffs, int, decltype(&canonical_less)> merged(&canonical_less);
  for (auto& [p, e] : raw) merged[p] += e;
  for (auto& [p, e] : merged) out.factors.emplace_back(p, e);
  return out;
}

std::vector<uint32_t> find_roots(const Field& F, const Coeffs& f,
                                 uint64_t seed) {
  std::vector<uint32_t> roots;
  if (deg(f) <= 0) return roots;
  Coeffs g = monic(F, f);
  Coeffs x{0, 1};
  // gcd with x^q - x isolates the product of distinct linear factors.
  Coeffs h = frobmod(F, rem(F, x, g), F.degree(), g);
  Coeffs lin = gcd(F, g, add(h, x));
  if (deg(lin) <= 0) return roots;
  std::mt19937_64 rng(seed);
  std::vector<Coeffs> parts;
  equal_degree_split(F, lin, 1, rng, parts);
  for (const auto& p : parts) roots.push_back(p[0]);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace fermat
