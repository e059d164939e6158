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

#include "hensel.hpp"

#include "fermat/errors.hpp"

namespace fermat::detail {

using namespace upoly;

Series to_series(const BiPoly& f) { return f.transpose().rows; }

BiPoly from_series(const Field& F, const Series& s) {
  BiPoly t(F);
  t.rows = s;
  t.trim();
  return t.transpose();
}

Series series_mul(const Field& F, const Series& a, const Series& b, int n) {
  Series out(std::min<std::size_t>(n, a.size() + b.size()));
  for (std::size_t i = 0; i < a.size() && static_cast<int>(i) < n; ++i) {
    if (a[i].empty()) continue;
    for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) < n; ++j)
      if (!b[j].empty()) add_to(out[i + j], mul(F, a[i], b[j]));
  }
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

namespace {

// f = G * H mod y^n with G(x,0) = g0, H(x,0) = h0.
void lift_pair(const Field& F, const Series& f, const Coeffs& g0,
               const Coeffs& h0, int n, Series& G, Series& H) {
  Coeffs s, t;
  const Coeffs one = xgcd(F, g0, h0, &s, &t);
  if (one != Coeffs{1})
    throw InvariantViolation("Hensel lifting of non-coprime factors");
  G.assign(n, Coeffs{});
  H.assign(n, Coeffs{});
  G[0] = g0;
  H[0] = h0;
  for (int k = 1; k < n; ++k) {
    Coeffs e = k < static_cast<int>(f.size()) ? f[k] : Coeffs{};
    for (int i = 1; i < k; ++i)
      if (!G[i].empty() && !H[k - i].empty()) add_to(e, mul(F, G[i], H[k - i]));
    if (e.empty()) continue;
    // G_k h0 + g0 H_k = e, deg G_k < deg g0, since t h0 = 1 mod g0.
    G[k] = rem(F, mul(F, e, t), g0);
    auto q = divide_exact(F, add(e, mul(F, G[k], h0)), g0);
    if (!q) throw InvariantViolation("Hensel step is not exact");
    H[k] = std::move(*q);
  }
  while (!G.empty() && G.back().empty()) G.pop_back();
  while (!H.empty() && H.back().empty()) H.pop_back();
}

}  // namespace

std::vector<Series> hensel_lift(const Field& F, const Series& f,
                                const std::vector<Coeffs>& factors, int n) {
  std::vector<Series> out;
  if (factors.size() == 1) {
    out.push_back(Series(f.begin(), f.begin() + std::min<std::size_t>(n, f.size())));
    return out;
  }
  // Peel one factor at a time; rest starts as f and is the remaining
  // product after each step.
  Series rest(f.begin(), f.begin() + std::min<std::size_t>(n, f.size()));
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    Coeffs h0{1};
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      h0 = mul(F, h0, factors[j]);
    Series G, H;
    lift_pair(F, rest, factors[i], h0, n, G, H);
    out.push_back(std::move(G));
    rest = std::move(H);
  }
  out.push_back(std::move(rest));
  return out;
}

}  // namespace fermat::detail
