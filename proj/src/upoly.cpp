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

#include "fermat/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "fermat/errors.hpp"

namespace fermat::upoly {

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs r = a.size() >= b.size() ? a : b;
  const Coeffs& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] ^= s[i];
  trim(r);
  return r;
}

void add_to(Coeffs& acc, const Coeffs& b) {
  if (acc.size() < b.size()) acc.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) acc[i] ^= b[i];
  trim(acc);
}

void axpy(const Field& F, Coeffs& acc, uint32_t c, const Coeffs& b,
          std::size_t shift) {
  if (c == 0 || b.empty()) return;
  if (acc.size() < b.size() + shift) acc.resize(b.size() + shift, 0);
  if (F.has_tables()) {
    const uint32_t* lg = F.log_table();
    const uint32_t* ex = F.exp_table();
    const uint32_t lc = lg[c];
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i]) acc[i + shift] ^= ex[lc + lg[b[i]]];
    }
  } else {
    for (std::size_t i = 0; i < b.size(); ++i) acc[i + shift] ^= F.mul(c, b[i]);
  }
  trim(acc);
}

Coeffs scale(const Field& F, const Coeffs& a, uint32_t c) {
  Coeffs r;
  axpy(F, r, c, a);
  return r;
}

Coeffs mul(const Field& F, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  if (F.has_tables()) {
    const uint32_t* lg = F.log_table();
    const uint32_t* ex = F.exp_table();
    std::vector<uint32_t> lb(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) lb[j] = lg[b[j]];
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      const uint32_t la = lg[a[i]];
      uint32_t* out = r.data() + i;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j]) out[j] ^= ex[la + lb[j]];
      }
    }
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] ^= F.mul(a[i], b[j]);
    }
  }
  trim(r);
  return r;
}

Coeffs pow(const Field& F, const Coeffs& a, uint64_t e) {
  Coeffs r{1};
  Coeffs base = a;
  while (e) {
    if (e & 1) r = mul(F, r, base);
    e >>= 1;
    if (e) base = mul(F, base, base);
  }
  return r;
}

void divrem(const Field& F, const Coeffs& a, const Coeffs& b, Coeffs* q,
            Coeffs* r) {
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  Coeffs rr = a;
  const int db = deg(b);
  Coeffs qq;
  if (deg(rr) >= db) qq.assign(rr.size() - b.size() + 1, 0);
  const uint32_t inv_lead = F.inv(b.back());
  while (deg(rr) >= db) {
    const std::size_t shift = rr.size() - b.size();
    const uint32_t c = F.mul(rr.back(), inv_lead);
    qq[shift] = c;
    // rr -= c * x^shift * b, top coefficient cancels exactly
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
      rr[i + shift] ^= F.mul(c, b[i]);
    rr.pop_back();
    trim(rr);
  }
  trim(qq);
  if (q) *q = std::move(qq);
  if (r) *r = std::move(rr);
}

Coeffs rem(const Field& F, const Coeffs& a, const Coeffs& b) {
  Coeffs r;
  divrem(F, a, b, nullptr, &r);
  return r;
}

Coeffs quo(const Field& F, const Coeffs& a, const Coeffs& b) {
  Coeffs q;
  divrem(F, a, b, &q, nullptr);
  return q;
}

std::optional<Coeffs> divide_exact(const Field& F, const Coeffs& a,
                                   const Coeffs& b) {
  Coeffs q, r;
  divrem(F, a, b, &q, &r);
  if (!r.empty()) return std::nullopt;
  return q;
}

Coeffs monic(const Field& F, const Coeffs& a) {
  if (a.empty() || a.back() == 1) return a;
  return scale(F, a, F.inv(a.back()));
}

Coeffs gcd(const Field& F, const Coeffs& a, const Coeffs& b) {
  Coeffs x = a, y = b;
  while (!y.empty()) {
    Coeffs r = rem(F, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(F, x);
}

Coeffs xgcd(const Field& F, const Coeffs& a, const Coeffs& b, Coeffs* s,
            Coeffs* t) {
  Coeffs r0 = a, r1 = b;
  Coeffs s0{1}, s1{};
  Coeffs t0{}, t1{1};
  while (!r1.empty()) {
    Coeffs q, r;
    divrem(F, r0, r1, &q, &r);
    Coeffs s2 = add(s0, mul(F, q, s1));
    Coeffs t2 = add(t0, mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    if (s) *s = {};
    if (t) *t = {};
    return {};
  }
  const uint32_t inv = F.inv(r0.back());
  if (s) *s = scale(F, s0, inv);
  if (t) *t = scale(F, t0, inv);
  return scale(F, r0, inv);
}

Coeffs derivative(const Coeffs& a) {
  Coeffs r;
  for (std::size_t i = 1; i < a.size(); i += 2) {
    r.resize(i, 0);
    r[i - 1] = a[i];
  }
  trim(r);
  return r;
}

Coeffs sqrt(const Field& F, const Coeffs& a) {
  Coeffs r((a.size() + 1) / 2, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (i % 2) throw InvalidArgument("polynomial is not a square");
    r[i / 2] = F.sqrt(a[i]);
  }
  trim(r);
  return r;
}

Coeffs mulmod(const Field& F, const Coeffs& a, const Coeffs& b,
              const Coeffs& m) {
  return rem(F, mul(F, a, b), m);
}

Coeffs powmod(const Field& F, const Coeffs& a, uint64_t e, const Coeffs& m) {
  Coeffs r = rem(F, Coeffs{1}, m);
  Coeffs base = rem(F, a, m);
  while (e) {
    if (e & 1) r = mulmod(F, r, base, m);
    e >>= 1;
    if (e) base = mulmod(F, base, base, m);
  }
  return r;
}

Coeffs frobmod(const Field& F, const Coeffs& a, int k, const Coeffs& m) {
  Coeffs r = rem(F, a, m);
  for (int i = 0; i < k; ++i) {
    // Squaring is coefficient-wise in characteristic 2.
    Coeffs sq(r.empty() ? 0 : 2 * r.size() - 1, 0);
    for (std::size_t j = 0; j < r.size(); ++j) sq[2 * j] = F.sqr(r[j]);
    trim(sq);
    r = rem(F, sq, m);
  }
  return r;
}

uint32_t eval(const Field& F, const Coeffs& a, uint32_t x) {
  uint32_t r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = F.mul(r, x) ^ a[i];
  return r;
}

Coeffs shift(const Field& F, const Coeffs& a, uint32_t c) {
  // Horner in the ring: r = r * (x + c) + a_i
  Coeffs r;
  for (std::size_t i = a.size(); i-- > 0;) {
    Coeffs nr(r.size() + 1, 0);
    for (std::size_t j = 0; j < r.size(); ++j) {
      nr[j + 1] ^= r[j];
      nr[j] ^= F.mul(c, r[j]);
    }
    nr[0] ^= a[i];
    trim(nr);
    r = std::move(nr);
  }
  return r;
}

Coeffs map(const Coeffs& a, const Embedding& e) {
  Coeffs r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = e.apply(a[i]);
  return r;
}

bool is_squarefree(const Field& F, const Coeffs& a) {
  if (deg(a) <= 0) return true;
  Coeffs d = derivative(a);
  if (d.empty()) return false;
  return deg(gcd(F, a, d)) == 0;
}

bool canonical_less(const Coeffs& a, const Coeffs& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::string to_string(const Coeffs& a, char var) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (!a[i]) continue;
    if (!first) os << "+";
    first = false;
    const bool show_coeff = a[i] != 1 || i == 0;
    if (show_coeff) os << std::hex << a[i] << std::dec;
    if (i > 0) {
      if (show_coeff) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace fermat::upoly
