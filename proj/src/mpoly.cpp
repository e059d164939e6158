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

#include "fermat/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <unordered_map>

namespace fermat {

namespace {

uint64_t pack(const Monomial& m) {
  return (uint64_t{m.x} << 42) | (uint64_t{m.y} << 21) | uint64_t{m.z};
}

Monomial unpack(uint64_t k) {
  constexpr uint64_t mask = MPoly::kMaxExponent;
  return {static_cast<uint32_t>(k >> 42), static_cast<uint32_t>((k >> 21) & mask),
          static_cast<uint32_t>(k & mask)};
}

void check_exponents(const Monomial& m) {
  if (m.x > MPoly::kMaxExponent || m.y > MPoly::kMaxExponent ||
      m.z > MPoly::kMaxExponent)
    throw CapacityError("monomial exponent exceeds 2^21 - 1");
}

bool grlex_greater(const Term& a, const Term& b) {
  return grlex(a.mono, b.mono) > 0;
}

void check_same(const MPoly& a, const MPoly& b) {
  if (a.field() != b.field())
    throw ContextMismatch("polynomials over " + a.field().to_string() +
                          " and " + b.field().to_string());
}

struct GrlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex(a, b) > 0;
  }
};

}  // namespace

MPoly MPoly::constant(const Field& field, uint32_t c) {
  return monomial(field, {}, c);
}

MPoly MPoly::variable(const Field& field, Var v) {
  Monomial m;
  if (v == Var::kX) m.x = 1;
  if (v == Var::kY) m.y = 1;
  if (v == Var::kZ) m.z = 1;
  return monomial(field, m, 1);
}

MPoly MPoly::monomial(const Field& field, Monomial m, uint32_t c) {
  MPoly p(field);
  check_exponents(m);
  if (!field.contains(c)) throw InvalidArgument("coefficient outside field");
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

MPoly MPoly::from_terms(const Field& field, std::vector<Term> terms) {
  MPoly p(field);
  std::sort(terms.begin(), terms.end(), grlex_greater);
  for (const auto& t : terms) {
    check_exponents(t.mono);
    if (!field.contains(t.coeff))
      throw InvalidArgument("coefficient outside field");
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff ^= t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(t);
    }
  }
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.total() == 0);
}

int MPoly::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.total());
}

int MPoly::degree(Var v) const {
  int d = -1;
  for (const auto& t : terms_)
    d = std::max(d, static_cast<int>(t.mono.exponent(v)));
  return d;
}

uint32_t MPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& mm) { return grlex(t.mono, mm) > 0; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

uint32_t MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.total() == 0)
    return terms_.back().coeff;
  return 0;
}

MPoly MPoly::operator+(const MPoly& o) const {
  check_same(*this, o);
  MPoly r(field_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() ||
        (a != terms_.end() && grlex(a->mono, b->mono) > 0)) {
      r.terms_.push_back(*a++);
    } else if (a == terms_.end() || grlex(a->mono, b->mono) < 0) {
      r.terms_.push_back(*b++);
    } else {
      uint32_t c = a->coeff ^ b->coeff;
      if (c) r.terms_.push_back({a->mono, c});
      ++a;
      ++b;
    }
  }
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  check_same(*this, o);
  if (terms_.empty() || o.terms_.empty()) return MPoly(field_);
  if (o.terms_.size() == 1 && o.terms_[0].mono.total() == 0)
    return scale(o.terms_[0].coeff);
  if (terms_.size() == 1 && terms_[0].mono.total() == 0)
    return o.scale(terms_[0].coeff);
  std::unordered_map<uint64_t, uint32_t> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& s : terms_) {
    for (const auto& t : o.terms_) {
      Monomial m = s.mono * t.mono;
      check_exponents(m);
      acc[pack(m)] ^= field_.mul(s.coeff, t.coeff);
    }
  }
  MPoly r(field_);
  r.terms_.reserve(acc.size());
  for (const auto& [k, c] : acc) {
    if (c) r.terms_.push_back({unpack(k), c});
  }
  std::sort(r.terms_.begin(), r.terms_.end(), grlex_greater);
  return r;
}

MPoly MPoly::scale(uint32_t c) const {
  MPoly r(field_);
  if (c == 0) return r;
  r.terms_ = terms_;
  if (c != 1) {
    for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
  }
  return r;
}

MPoly MPoly::pow(uint64_t e) const {
  MPoly r = constant(field_, 1);
  MPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

MPoly MPoly::normalized() const {
  if (terms_.empty() || terms_.front().coeff == 1) return *this;
  return scale(field_.inv(terms_.front().coeff));
}

MPoly MPoly::map(const Embedding& e) const {
  if (e.sub() != field_)
    throw ContextMismatch("embedding source " + e.sub().to_string() +
                          " differs from " + field_.to_string());
  MPoly r(e.sup());
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = e.apply(t.coeff);
  return r;
}

std::optional<MPoly> MPoly::descend(const Embedding& e) const {
  if (e.sup() != field_)
    throw ContextMismatch("embedding target " + e.sup().to_string() +
                          " differs from " + field_.to_string());
  MPoly r(e.sub());
  r.terms_ = terms_;
  for (auto& t : r.terms_) {
    auto c = e.preimage(t.coeff);
    if (!c) return std::nullopt;
    t.coeff = *c;
  }
  return r;
}

MPoly MPoly::frobenius(int k) const {
  MPoly r = *this;
  for (auto& t : r.terms_) {
    for (int i = 0; i < k; ++i) t.coeff = field_.sqr(t.coeff);
  }
  return r;
}

uint32_t MPoly::eval(uint32_t x, uint32_t y, uint32_t z) const {
  uint32_t r = 0;
  for (const auto& t : terms_) {
    r ^= field_.mul(t.coeff, field_.mul(field_.pow(x, t.mono.x),
                                        field_.mul(field_.pow(y, t.mono.y),
                                                   field_.pow(z, t.mono.z))));
  }
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  return a.field_ == b.field_ && a.terms_ == b.terms_;
}

bool canonical_less(const MPoly& a, const MPoly& b) {
  if (a.total_degree() != b.total_degree())
    return a.total_degree() < b.total_degree();
  return a.to_string() < b.to_string();
}

// ------------------------------------------------------------ text I/O

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << "+";
    first = false;
    bool need_star = false;
    if (t.coeff != 1 || t.mono.total() == 0) {
      os << std::hex << t.coeff << std::dec;
      need_star = true;
    }
    const std::pair<char, uint32_t> vars[] = {
        {'x', t.mono.x}, {'y', t.mono.y}, {'z', t.mono.z}};
    for (const auto& [name, e] : vars) {
      if (e == 0) continue;
      if (need_star) os << "*";
      os << name;
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

MPoly MPoly::parse(const Field& field, std::string_view text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char ch = static_cast<unsigned char>(text[i]);
    if (std::isspace(ch)) continue;
    // U+00B7 MIDDLE DOT in UTF-8
    if (ch == 0xC2 && i + 1 < text.size() &&
        static_cast<unsigned char>(text[i + 1]) == 0xB7) {
      s.push_back('*');
      ++i;
      continue;
    }
    s.push_back(static_cast<char>(std::tolower(ch)));
  }
  if (s.empty()) throw InvalidArgument("empty polynomial text");
  std::vector<Term> terms;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> InvalidArgument {
    return InvalidArgument("cannot parse polynomial '" + std::string(text) +
                           "': " + why);
  };
  auto read_uint = [&](int base) -> uint64_t {
    std::size_t start = pos;
    uint64_t v = 0;
    auto [ptr, ec] =
        std::from_chars(s.data() + pos, s.data() + s.size(), v, base);
    if (ec != std::errc() || ptr == s.data() + start)
      throw fail("expected a number at offset " + std::to_string(start));
    pos = static_cast<std::size_t>(ptr - s.data());
    return v;
  };
  while (pos < s.size()) {
    Term t{{}, 1};
    bool any = false;
    for (;;) {
      if (pos >= s.size()) throw fail("dangling operator");
      char ch = s[pos];
      if (ch == 'x' || ch == 'y' || ch == 'z') {
        ++pos;
        uint64_t e = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          e = read_uint(10);
        }
        if (e > MPoly::kMaxExponent) throw fail("exponent too large");
        if (ch == 'x') t.mono.x += static_cast<uint32_t>(e);
        if (ch == 'y') t.mono.y += static_cast<uint32_t>(e);
        if (ch == 'z') t.mono.z += static_cast<uint32_t>(e);
      } else if (std::isxdigit(static_cast<unsigned char>(ch))) {
        uint64_t c = read_uint(16);
        if (c > field.mask()) throw fail("coefficient outside field");
        t.coeff = field.mul(t.coeff, static_cast<uint32_t>(c));
      } else {
        throw fail(std::string("unexpected '") + ch + "'");
      }
      any = true;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!any) throw fail("empty term");
    terms.push_back(t);
    if (pos < s.size()) {
      if (s[pos] != '+') throw fail(std::string("unexpected '") + s[pos] + "'");
      ++pos;
      if (pos >= s.size()) throw fail("trailing '+'");
    }
  }
  return from_terms(field, std::move(terms));
}

// ------------------------------------------------------------ operations

MPoly poly_arith(const MPoly& f, const MPoly& g, PolyOp op) {
  return op == PolyOp::kAdd ? f + g : f * g;
}

MPoly divide_exact(const MPoly& f, const MPoly& g) {
  check_same(f, g);
  if (g.is_zero()) throw DivisionByZero("division by the zero polynomial");
  const Field& F = f.field();
  const Term lg = g.leading();
  const uint32_t inv_lc = F.inv(lg.coeff);
  std::map<Monomial, uint32_t, GrlexDesc> r;
  for (const auto& t : f.terms()) r.emplace(t.mono, t.coeff);
  std::vector<Term> q, rem;
  while (!r.empty()) {
    auto it = r.begin();
    const Term lt{it->first, it->second};
    if (!lg.mono.divides(lt.mono)) {
      rem.push_back(lt);
      r.erase(it);
      continue;
    }
    const Monomial qm = lt.mono / lg.mono;
    const uint32_t qc = F.mul(lt.coeff, inv_lc);
    q.push_back({qm, qc});
    for (const auto& gt : g.terms()) {
      const Monomial m = qm * gt.mono;
      const uint32_t c = F.mul(qc, gt.coeff);
      auto [pos, inserted] = r.emplace(m, c);
      if (!inserted) {
        pos->second ^= c;
        if (pos->second == 0) r.erase(pos);
      }
    }
  }
  if (!rem.empty()) {
    MPoly remainder = MPoly::from_terms(F, std::move(rem));
    throw NonExactDivision("division of " + f.to_string() + " by " +
                               g.to_string() + " leaves remainder " +
                               remainder.to_string(),
                           remainder);
  }
  return MPoly::from_terms(F, std::move(q));
}

MPoly substitute(const MPoly& f, Var v, const MPoly& expr) {
  check_same(f, expr);
  const Field& F = f.field();
  // Group terms by the exponent of v.
  std::map<uint32_t, std::vector<Term>> by_power;
  for (const auto& t : f.terms()) {
    Term rest = t;
    uint32_t e = 0;
    if (v == Var::kX) std::swap(e, rest.mono.x);
    if (v == Var::kY) std::swap(e, rest.mono.y);
    if (v == Var::kZ) std::swap(e, rest.mono.z);
    by_power[e].push_back(rest);
  }
  MPoly out(F);
  if (expr.is_constant()) {
    const uint32_t c = expr.constant_term();
    std::vector<Term> terms;
    for (auto& [e, ts] : by_power) {
      const uint32_t ce = F.pow(c, e);
      for (auto& t : ts) terms.push_back({t.mono, F.mul(t.coeff, ce)});
    }
    return MPoly::from_terms(F, std::move(terms));
  }
  MPoly power = MPoly::constant(F, 1);
  uint32_t have = 0;
  for (auto& [e, ts] : by_power) {
    if (e - have <= 8) {
      for (; have < e; ++have) power = power * expr;
    } else {
      power = power * expr.pow(e - have);
      have = e;
    }
    out += MPoly::from_terms(F, ts) * power;
  }
  return out;
}

MPoly swap_xy(const MPoly& f) {
  std::vector<Term> terms = f.terms();
  for (auto& t : terms) std::swap(t.mono.x, t.mono.y);
  return MPoly::from_terms(f.field(), std::move(terms));
}

MPoly HomogeneousDecomposition::part(const Field& field, int degree) const {
  for (const auto& [d, p] : parts) {
    if (d == degree) return p;
  }
  return MPoly(field);
}

MPoly HomogeneousDecomposition::sum(const Field& field) const {
  MPoly s(field);
  for (const auto& [d, p] : parts) s += p;
  return s;
}

HomogeneousDecomposition homogeneous_parts(const MPoly& f) {
  HomogeneousDecomposition out;
  std::vector<Term> cur;
  int cur_deg = -1;
  auto flush = [&] {
    if (!cur.empty())
      out.parts.emplace_back(cur_deg, MPoly::from_terms(f.field(), cur));
    cur.clear();
  };
  // Terms are already grouped by descending total degree.
  for (const auto& t : f.terms()) {
    const int d = static_cast<int>(t.mono.total());
    if (d != cur_deg) {
      flush();
      cur_deg = d;
    }
    cur.push_back(t);
  }
  flush();
  return out;
}

bool is_homogeneous(const MPoly& f) {
  return f.is_zero() ||
         f.terms().front().mono.total() == f.terms().back().mono.total();
}

bool is_symmetric(const MPoly& f) {
  if (f.degree(Var::kZ) > 0)
    throw InvalidArgument("is_symmetric expects a polynomial in x, y only");
  return swap_xy(f) == f;
}

}  // namespace fermat
