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

#include "fermat/bipoly.hpp"

#include <algorithm>

#include "fermat/errors.hpp"

namespace fermat {

using namespace upoly;

BiPoly BiPoly::constant(const Field& f, uint32_t c) {
  BiPoly p(f);
  if (c) p.rows = {Coeffs{c}};
  return p;
}

BiPoly BiPoly::from_mpoly(const MPoly& p) {
  if (p.degree(Var::kZ) > 0)
    throw InvalidArgument("expected a polynomial in x, y; got " +
                          p.to_string());
  BiPoly b(p.field());
  for (const auto& t : p.terms())
    b.set(static_cast<int>(t.mono.x), static_cast<int>(t.mono.y), t.coeff);
  b.trim();
  return b;
}

MPoly BiPoly::to_mpoly() const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j])
        terms.push_back({{static_cast<uint32_t>(i), static_cast<uint32_t>(j), 0},
                         rows[i][j]});
    }
  }
  return MPoly::from_terms(field, std::move(terms));
}

bool BiPoly::is_constant() const {
  return rows.empty() || (rows.size() == 1 && rows[0].size() <= 1);
}

int BiPoly::deg_y() const {
  int d = -1;
  for (const auto& r : rows) d = std::max(d, deg(r));
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].empty()) d = std::max(d, static_cast<int>(i) + deg(rows[i]));
  }
  return d;
}

uint32_t BiPoly::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i >= static_cast<int>(rows.size())) return 0;
  const auto& r = rows[i];
  return j < static_cast<int>(r.size()) ? r[j] : 0;
}

void BiPoly::set(int i, int j, uint32_t c) {
  if (i >= static_cast<int>(rows.size())) rows.resize(i + 1);
  auto& r = rows[i];
  if (j >= static_cast<int>(r.size())) r.resize(j + 1, 0);
  r[j] = c;
}

void BiPoly::trim() {
  for (auto& r : rows) upoly::trim(r);
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
}

uint32_t BiPoly::leading_coeff() const {
  const int d = total_degree();
  if (d < 0) return 0;
  for (int i = deg_x(); i >= 0; --i) {
    if (uint32_t c = coeff(i, d - i)) return c;
  }
  return 0;
}

BiPoly BiPoly::normalized() const {
  const uint32_t lc = leading_coeff();
  if (lc == 0 || lc == 1) return *this;
  return scale(field.inv(lc));
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = rows.size() >= o.rows.size() ? *this : o;
  const BiPoly& s = rows.size() >= o.rows.size() ? o : *this;
  for (std::size_t i = 0; i < s.rows.size(); ++i) add_to(r.rows[i], s.rows[i]);
  r.trim();
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r(field);
  if (rows.empty() || o.rows.empty()) return r;
  r.rows.assign(rows.size() + o.rows.size() - 1, {});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) continue;
    for (std::size_t j = 0; j < o.rows.size(); ++j) {
      if (o.rows[j].empty()) continue;
      add_to(r.rows[i + j], mul(field, rows[i], o.rows[j]));
    }
  }
  r.trim();
  return r;
}

BiPoly BiPoly::scale(uint32_t c) const {
  BiPoly r(field);
  if (c == 0) return r;
  r.rows = rows;
  for (auto& row : r.rows) row = upoly::scale(field, row, c);
  r.trim();
  return r;
}

BiPoly BiPoly::transpose() const {
  BiPoly r(field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j])
        r.set(static_cast<int>(j), static_cast<int>(i), rows[i][j]);
    }
  }
  r.trim();
  return r;
}

Coeffs BiPoly::eval_y(uint32_t y0) const {
  Coeffs r(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) r[i] = eval(field, rows[i], y0);
  upoly::trim(r);
  return r;
}

Coeffs BiPoly::eval_x(uint32_t x0) const {
  Coeffs r;
  for (std::size_t i = rows.size(); i-- > 0;) {
    r = upoly::scale(field, r, x0);
    add_to(r, rows[i]);
  }
  return r;
}

BiPoly BiPoly::shift_y(uint32_t c) const {
  BiPoly r = *this;
  if (c == 0) return r;
  for (auto& row : r.rows) row = shift(field, row, c);
  r.trim();
  return r;
}

BiPoly BiPoly::shear(uint32_t lambda) const {
  if (lambda == 0) return *this;
  BiPoly r(field);
  const int dy = deg_y();
  std::vector<uint32_t> lpow(std::max(dy, 0) + 1, 1);
  for (int k = 1; k <= dy; ++k) lpow[k] = field.mul(lpow[k - 1], lambda);
  // (y + l x)^j = sum over k with binom(j, k) odd of l^(j-k) x^(j-k) y^k
  for (int i = 0; i <= deg_x(); ++i) {
    for (int j = 0; j < static_cast<int>(rows[i].size()); ++j) {
      const uint32_t a = rows[i][j];
      if (!a) continue;
      for (int k = j;; k = (k - 1) & j) {
        const uint32_t c = field.mul(a, lpow[j - k]);
        r.set(i + j - k, k, r.coeff(i + j - k, k) ^ c);
        if (k == 0) break;
      }
    }
  }
  r.trim();
  return r;
}

BiPoly BiPoly::derivative_x() const {
  BiPoly r(field);
  for (std::size_t i = 1; i < rows.size(); i += 2) {
    r.rows.resize(i);
    r.rows[i - 1] = rows[i];
  }
  r.trim();
  return r;
}

BiPoly BiPoly::derivative_y() const {
  BiPoly r = *this;
  for (auto& row : r.rows) row = derivative(row);
  r.trim();
  return r;
}

BiPoly BiPoly::sqrt() const {
  BiPoly r(field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) continue;
    if (i % 2) throw InvalidArgument("bivariate polynomial is not a square");
    r.rows.resize(i / 2 + 1);
    r.rows[i / 2] = upoly::sqrt(field, rows[i]);
  }
  r.trim();
  return r;
}

BiPoly BiPoly::map(const Embedding& e) const {
  BiPoly r(e.sup());
  r.rows = rows;
  for (auto& row : r.rows) row = upoly::map(row, e);
  return r;
}

std::optional<BiPoly> BiPoly::descend(const Embedding& e) const {
  BiPoly r(e.sub());
  r.rows = rows;
  for (auto& row : r.rows) {
    for (auto& c : row) {
      auto v = e.preimage(c);
      if (!v) return std::nullopt;
      c = *v;
    }
  }
  return r;
}

BiPoly BiPoly::frobenius(int k) const {
  BiPoly r = *this;
  for (auto& row : r.rows) {
    for (auto& c : row) {
      for (int i = 0; i < k; ++i) c = field.sqr(c);
    }
  }
  return r;
}

Coeffs BiPoly::top_form_at_x1() const {
  const int d = total_degree();
  Coeffs t;
  if (d < 0) return t;
  t.assign(d + 1, 0);
  for (int j = 0; j <= d; ++j) t[j] = coeff(d - j, j);
  upoly::trim(t);
  return t;
}

std::optional<BiPoly> bi_divide_exact(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw DivisionByZero("bivariate division by zero");
  const Field& F = a.field;
  BiPoly r = a;
  BiPoly q(F);
  const int db = b.deg_x();
  if (r.deg_x() >= db) q.rows.assign(r.deg_x() - db + 1, {});
  while (!r.is_zero() && r.deg_x() >= db) {
    auto qc = divide_exact(F, r.rows.back(), b.rows.back());
    if (!qc) return std::nullopt;
    const int shift = r.deg_x() - db;
    for (int i = 0; i <= db; ++i)
      add_to(r.rows[i + shift], mul(F, *qc, b.rows[i]));
    q.rows[shift] = std::move(*qc);
    r.trim();
  }
  if (!r.is_zero()) return std::nullopt;
  q.trim();
  return q;
}

namespace {

Coeffs interpolate(const Field& F, const std::vector<uint32_t>& xs,
                   const std::vector<uint32_t>& ys) {
  Coeffs p;
  Coeffs m{1};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const uint32_t diff = eval(F, p, xs[i]) ^ ys[i];
    if (diff) {
      const uint32_t c = F.div(diff, eval(F, m, xs[i]));
      axpy(F, p, c, m);
    }
    m = mul(F, m, Coeffs{xs[i], 1});
  }
  return p;
}

// gcd of all rows, monic.
Coeffs content(const BiPoly& p) {
  Coeffs g;
  for (const auto& r : p.rows) {
    g = gcd(p.field, g, r);
    if (deg(g) == 0) break;
  }
  return g;
}

BiPoly divide_rows(const BiPoly& p, const Coeffs& c) {
  BiPoly r = p;
  if (deg(c) <= 0 && (c.empty() || c[0] == 1)) return r;
  for (auto& row : r.rows) row = quo(p.field, row, c);
  return r;
}

BiPoly times_rows(const BiPoly& p, const Coeffs& c) {
  BiPoly r = p;
  for (auto& row : r.rows) row = mul(p.field, row, c);
  r.trim();
  return r;
}

// Both primitive with respect to the main (row) variable.
BiPoly gcd_primitive(const BiPoly& a, const BiPoly& b) {
  const Field& E = a.field;
  if (a.deg_x() == 0 || b.deg_x() == 0) return BiPoly::constant(E, 1);
  const Coeffs gamma = gcd(E, a.rows.back(), b.rows.back());
  const int bound = deg(gamma) + std::min(a.deg_y(), b.deg_y());
  const uint64_t want = 2 * static_cast<uint64_t>(bound + 1) + 32;
  int e = 1;
  while ((uint64_t{1} << std::min(E.degree() * e, 40)) < want) ++e;
  const Field F = extension_field(E, e);
  const Embedding emb = embed(E, F);
  const BiPoly A = a.map(emb), B = b.map(emb);
  const Coeffs G = upoly::map(gamma, emb);

  int min_deg = std::min(A.deg_x(), B.deg_x()) + 1;
  std::vector<uint32_t> xs;
  std::vector<Coeffs> images;
  for (uint64_t u = 0; u < F.size(); ++u) {
    const uint32_t u0 = static_cast<uint32_t>(u);
    if (eval(F, A.rows.back(), u0) == 0 || eval(F, B.rows.back(), u0) == 0)
      continue;
    Coeffs img = gcd(F, A.eval_y(u0), B.eval_y(u0));
    if (deg(img) == 0) return BiPoly::constant(E, 1);
    if (deg(img) > min_deg) continue;
    if (deg(img) < min_deg) {
      min_deg = deg(img);
      xs.clear();
      images.clear();
    }
    xs.push_back(u0);
    images.push_back(upoly::scale(F, img, eval(F, G, u0)));
    if (static_cast<int>(xs.size()) < bound + 1) continue;

    BiPoly h(F);
    h.rows.resize(min_deg + 1);
    std::vector<uint32_t> ys(xs.size());
    for (int j = 0; j <= min_deg; ++j) {
      for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = images[i][j];
      h.rows[j] = interpolate(F, xs, ys);
    }
    h.trim();
    h = divide_rows(h, content(h));
    if (!bi_divide_exact(A, h) || !bi_divide_exact(B, h)) continue;
    auto down = h.normalized().descend(emb);
    if (!down)
      throw InvariantViolation("gcd image does not descend to " +
                               E.to_string());
    return *down;
  }
  throw InvariantViolation("gcd interpolation ran out of evaluation points");
}

}  // namespace

BiPoly bi_gcd(const BiPoly& a, const BiPoly& b) {
  if (a.field != b.field)
    throw ContextMismatch("gcd operands over " + a.field.to_string() +
                          " and " + b.field.to_string());
  if (a.is_zero() && b.is_zero())
    throw InvalidArgument("gcd of two zero polynomials");
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  // Rows indexed by y, coefficients in x.
  const BiPoly A = a.transpose(), B = b.transpose();
  const Coeffs ca = content(A), cb = content(B);
  const Coeffs c = gcd(a.field, ca, cb);
  const BiPoly g =
      gcd_primitive(divide_rows(A, ca), divide_rows(B, cb));
  return times_rows(g, c).transpose().normalized();
}

MPoly gcd_bivariate(const MPoly& f, const MPoly& g) {
  return bi_gcd(BiPoly::from_mpoly(f), BiPoly::from_mpoly(g)).to_mpoly();
}

}  // namespace fermat
