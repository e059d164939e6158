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

#include "fermat/gf2m.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <mutex>
#include <sstream>

#include "fermat/errors.hpp"
#include "fermat/upoly.hpp"

namespace fermat {

namespace gf2x {

int degree(uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t mod) {
  const int dm = degree(mod);
  const uint64_t top = uint64_t{1} << dm;
  uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= mod;
  }
  return r;
}

uint64_t gcd(uint64_t a, uint64_t b) {
  while (b) {
    int da = degree(a), db = degree(b);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    a ^= b << (da - db);
    if (degree(a) < db) std::swap(a, b);
  }
  return a;
}

namespace {

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// x^(2^k) mod p
uint64_t x_pow2k(int k, uint64_t p) {
  uint64_t r = 2;  // callers guarantee degree(p) >= 2
  for (int i = 0; i < k; ++i) r = mulmod(r, r, p);
  return r;
}

}  // namespace

// Rabin's test.
bool is_irreducible(uint64_t p) {
  const int m = degree(p);
  if (m < 1) return false;
  if (m == 1) return true;
  if ((p & 1) == 0) return false;
  if (x_pow2k(m, p) != 2) return false;
  for (int q : prime_divisors(m)) {
    uint64_t h = x_pow2k(m / q, p) ^ 2;
    if (degree(gcd(p, h)) != 0) return false;
  }
  return true;
}

uint64_t least_irreducible(int m) {
  if (m == 1) return 0b11;
  for (uint64_t p = (uint64_t{1} << m) | 1;; p += 2) {
    if (is_irreducible(p)) return p;
  }
}

std::string to_string(uint64_t p) {
  if (p == 0) return "0";
  std::string out;
  for (int i = degree(p); i >= 0; --i) {
    if (!((p >> i) & 1)) continue;
    if (!out.empty()) out += "+";
    if (i == 0)
      out += "1";
    else if (i == 1)
      out += "x";
    else
      out += "x^" + std::to_string(i);
  }
  return out;
}

}  // namespace gf2x

namespace detail {

struct FieldData {
  int m = 1;
  uint64_t modulus = 0b11;
  uint32_t mask = 1;
  std::vector<uint32_t> log;
  std::vector<uint32_t> exp;

  uint32_t slow_mul(uint32_t a, uint32_t b) const {
    uint64_t r = 0;
    uint64_t aa = a;
    while (b) {
      if (b & 1) r ^= aa;
      b >>= 1;
      aa <<= 1;
    }
    for (int i = 2 * m - 2; i >= m; --i) {
      if ((r >> i) & 1) r ^= modulus << (i - m);
    }
    return static_cast<uint32_t>(r);
  }
};

}  // namespace detail

namespace {

constexpr int kTableMaxDegree = 20;

uint64_t group_order(int m) { return (uint64_t{1} << m) - 1; }

std::vector<uint64_t> prime_factors_u64(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

uint32_t slow_pow(const detail::FieldData& d, uint32_t a, uint64_t e) {
  uint32_t r = 1;
  while (e) {
    if (e & 1) r = d.slow_mul(r, a);
    a = d.slow_mul(a, a);
    e >>= 1;
  }
  return r;
}

void build_tables(detail::FieldData& d) {
  const uint64_t ord = group_order(d.m);
  if (d.m == 1) {
    d.log = {0, 0};
    d.exp = {1, 1};
    return;
  }
  const auto primes = prime_factors_u64(ord);
  uint32_t g = 2;
  for (;; ++g) {
    bool primitive = true;
    for (uint64_t p : primes) {
      if (slow_pow(d, g, ord / p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) break;
  }
  d.log.assign(std::size_t{1} << d.m, 0);
  d.exp.assign(2 * ord, 0);
  uint32_t v = 1;
  for (uint64_t i = 0; i < ord; ++i) {
    d.exp[i] = v;
    d.exp[i + ord] = v;
    d.log[v] = static_cast<uint32_t>(i);
    v = d.slow_mul(v, g);
  }
}

std::mutex& registry_mutex() {
  static std::mutex mu;
  return mu;
}

std::map<uint64_t, std::shared_ptr<const detail::FieldData>>& registry() {
  static std::map<uint64_t, std::shared_ptr<const detail::FieldData>> r;
  return r;
}

std::shared_ptr<const detail::FieldData> intern_field(int m, uint64_t mod) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& reg = registry();
  if (auto it = reg.find(mod); it != reg.end()) return it->second;
  auto d = std::make_shared<detail::FieldData>();
  d->m = m;
  d->modulus = mod;
  d->mask = m == 32 ? 0xffffffffu : ((uint32_t{1} << m) - 1);
  if (m <= kTableMaxDegree) build_tables(*d);
  reg.emplace(mod, d);
  return d;
}

std::string hex_of(uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

uint64_t parse_hex(std::string_view s) {
  if (s.starts_with("0x") || s.starts_with("0X")) s.remove_prefix(2);
  if (s.empty()) throw InvalidArgument("empty hex literal");
  uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InvalidArgument("bad hex literal '" + std::string(s) + "'");
  return v;
}

}  // namespace

Field::Field() : d_(intern_field(1, 0b11)) {}

Field::Field(std::shared_ptr<const detail::FieldData> data)
    : d_(std::move(data)) {}

Field Field::make(int m, std::optional<uint64_t> modulus) {
  if (m < 1 || m > kMaxDegree)
    throw InvalidArgument("field degree " + std::to_string(m) +
                          " outside 1..32");
  uint64_t mod = 0;
  if (modulus) {
    mod = *modulus;
    if (gf2x::degree(mod) != m)
      throw InvalidArgument("modulus " + gf2x::to_string(mod) +
                            " does not have degree " + std::to_string(m));
    if (!gf2x::is_irreducible(mod))
      throw InvalidArgument("modulus " + gf2x::to_string(mod) +
                            " is reducible over GF(2)");
  } else {
    mod = gf2x::least_irreducible(m);
  }
  return Field(intern_field(m, mod));
}

Field Field::parse(std::string_view text) {
  if (!text.starts_with("gf2"))
    throw InvalidArgument("field must look like gf2^m[/modulus-hex], got '" +
                          std::string(text) + "'");
  text.remove_prefix(3);
  if (text.empty()) return Field::make(1);
  if (text.front() != '^')
    throw InvalidArgument("expected '^' after gf2");
  text.remove_prefix(1);
  std::optional<uint64_t> mod;
  auto slash = text.find('/');
  std::string_view deg_part = text.substr(0, slash);
  if (slash != std::string_view::npos) mod = parse_hex(text.substr(slash + 1));
  int m = 0;
  auto [ptr, ec] =
      std::from_chars(deg_part.data(), deg_part.data() + deg_part.size(), m);
  if (ec != std::errc() || ptr != deg_part.data() + deg_part.size())
    throw InvalidArgument("bad field degree '" + std::string(deg_part) + "'");
  return Field::make(m, mod);
}

int Field::degree() const { return d_->m; }
uint64_t Field::modulus() const { return d_->modulus; }
uint64_t Field::size() const { return uint64_t{1} << d_->m; }
uint32_t Field::mask() const { return d_->mask; }
bool Field::has_tables() const { return !d_->exp.empty(); }
const uint32_t* Field::log_table() const { return d_->log.data(); }
const uint32_t* Field::exp_table() const { return d_->exp.data(); }

uint32_t Field::mul(uint32_t a, uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  const auto& d = *d_;
  if (!d.exp.empty()) return d.exp[d.log[a] + d.log[b]];
  return d.slow_mul(a, b);
}

uint32_t Field::inv(uint32_t a) const {
  if (a == 0) throw DivisionByZero("inverse of zero in " + to_string());
  const auto& d = *d_;
  const uint64_t ord = group_order(d.m);
  if (!d.exp.empty()) return d.exp[(ord - d.log[a]) % ord];
  return pow(a, ord - 1);
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const auto& d = *d_;
  const uint64_t ord = group_order(d.m);
  if (!d.exp.empty()) {
    uint64_t l = (static_cast<unsigned __int128>(d.log[a]) * (e % ord)) % ord;
    return d.exp[l];
  }
  e %= ord;
  if (e == 0) return 1;
  uint32_t r = 1;
  while (e) {
    if (e & 1) r = d.slow_mul(r, a);
    a = d.slow_mul(a, a);
    e >>= 1;
  }
  return r;
}

uint32_t Field::sqrt(uint32_t a) const {
  for (int i = 1; i < d_->m; ++i) a = sqr(a);
  return a;
}

uint32_t Field::trace(uint32_t a) const {
  uint32_t t = a;
  uint32_t s = a;
  for (int i = 1; i < d_->m; ++i) {
    s = sqr(s);
    t ^= s;
  }
  return t;
}

std::string Field::to_string() const {
  return "gf2^" + std::to_string(d_->m) + "/" + hex_of(d_->modulus);
}

bool operator==(const Field& a, const Field& b) {
  return a.d_ == b.d_ ||
         (a.d_->m == b.d_->m && a.d_->modulus == b.d_->modulus);
}

Field make_field(int m, std::optional<uint64_t> modulus) {
  return Field::make(m, modulus);
}

Field extension_field(const Field& base, int e) {
  if (e < 1 || base.degree() * e > Field::kMaxDegree)
    throw CapacityError("extension of degree " + std::to_string(e) + " over " +
                        base.to_string() + " exceeds GF(2^32)");
  return Field::make(base.degree() * e);
}

// ---------------------------------------------------------------- FFElt

FFElt::FFElt(Field field, uint32_t value)
    : field_(std::move(field)), value_(value) {
  if (!field_.contains(value_))
    throw InvalidArgument("element " + hex_of(value_) + " outside " +
                          field_.to_string());
}

namespace {
void check_same(const FFElt& a, const FFElt& b) {
  if (a.field() != b.field())
    throw ContextMismatch("operands in " + a.field().to_string() + " and " +
                          b.field().to_string());
}
}  // namespace

FFElt FFElt::operator+(const FFElt& o) const {
  check_same(*this, o);
  return FFElt(field_, value_ ^ o.value_);
}

FFElt FFElt::operator*(const FFElt& o) const {
  check_same(*this, o);
  return FFElt(field_, field_.mul(value_, o.value_));
}

FFElt FFElt::operator/(const FFElt& o) const {
  check_same(*this, o);
  return FFElt(field_, field_.div(value_, o.value_));
}

FFElt FFElt::inv() const { return FFElt(field_, field_.inv(value_)); }

FFElt FFElt::pow(uint64_t e) const {
  return FFElt(field_, field_.pow(value_, e));
}

std::string FFElt::to_hex() const { return hex_of(value_); }

FFElt FFElt::from_hex(const Field& field, std::string_view hex) {
  uint64_t v = parse_hex(hex);
  if (v > field.mask())
    throw InvalidArgument("element " + std::string(hex) + " outside " +
                          field.to_string());
  return FFElt(field, static_cast<uint32_t>(v));
}

FFElt field_arith(const FFElt& a, const FFElt& b, FieldOp op) {
  switch (op) {
    case FieldOp::kAdd:
      return a + b;
    case FieldOp::kMul:
      return a * b;
    case FieldOp::kInv:
      return a.inv();
    case FieldOp::kPow:
      return a.pow(b.value());
  }
  throw InvalidArgument("unknown field operation");
}

std::vector<FFElt> frobenius_orbit(const FFElt& a) {
  std::vector<FFElt> out{a};
  const Field& F = a.field();
  for (uint32_t v = F.sqr(a.value()); v != a.value(); v = F.sqr(v))
    out.emplace_back(F, v);
  return out;
}

// ------------------------------------------------------------ Embedding

namespace detail {

struct EmbeddingData {
  Field sub;
  Field sup;
  uint32_t root = 0;
  std::vector<uint32_t> basis;  // images of X^i
  // Echelon form of the basis images with their source combinations.
  std::vector<std::pair<uint32_t, uint32_t>> rows;  // (image, combination)
  std::vector<int> pivots;
};

}  // namespace detail

Embedding::Embedding(std::shared_ptr<const detail::EmbeddingData> data)
    : d_(std::move(data)) {}

const Field& Embedding::sub() const { return d_->sub; }
const Field& Embedding::sup() const { return d_->sup; }
uint32_t Embedding::root() const { return d_->root; }

uint32_t Embedding::apply(uint32_t a) const {
  uint32_t r = 0;
  for (std::size_t i = 0; a; ++i, a >>= 1) {
    if (a & 1) r ^= d_->basis[i];
  }
  return r;
}

FFElt Embedding::operator()(const FFElt& a) const {
  if (a.field() != d_->sub)
    throw ContextMismatch("embedding source is " + d_->sub.to_string() +
                          ", element lives in " + a.field().to_string());
  return FFElt(d_->sup, apply(a.value()));
}

std::optional<uint32_t> Embedding::preimage(uint32_t b) const {
  uint32_t comb = 0;
  for (std::size_t i = 0; i < d_->rows.size(); ++i) {
    if ((b >> d_->pivots[i]) & 1) {
      b ^= d_->rows[i].first;
      comb ^= d_->rows[i].second;
    }
  }
  if (b != 0) return std::nullopt;
  return comb;
}

Embedding embed(const Field& sub, const Field& sup) {
  if (sup.degree() % sub.degree() != 0)
    throw InvalidArgument("cannot embed " + sub.to_string() + " into " +
                          sup.to_string() + ": degree " +
                          std::to_string(sub.degree()) + " does not divide " +
                          std::to_string(sup.degree()));
  static std::mutex mu;
  static std::map<std::pair<uint64_t, uint64_t>,
                  std::shared_ptr<const detail::EmbeddingData>>
      cache;
  const auto key = std::make_pair(sub.modulus(), sup.modulus());
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return Embedding(it->second);
  }

  auto d = std::make_shared<detail::EmbeddingData>();
  d->sub = sub;
  d->sup = sup;
  // Roots of the source modulus, which splits completely in the target.
  Coeffs modpoly;
  for (int i = 0; i <= sub.degree(); ++i)
    modpoly.push_back(static_cast<uint32_t>((sub.modulus() >> i) & 1));
  auto roots = find_roots(sup, modpoly, 0);
  if (roots.empty())
    throw InvariantViolation("no root of " + gf2x::to_string(sub.modulus()) +
                             " in " + sup.to_string());
  d->root = roots.front();
  uint32_t p = 1;
  for (int i = 0; i < sub.degree(); ++i) {
    d->basis.push_back(p);
    p = sup.mul(p, d->root);
  }
  for (int i = 0; i < sub.degree(); ++i) {
    uint32_t v = d->basis[i];
    uint32_t c = uint32_t{1} << i;
    for (std::size_t j = 0; j < d->rows.size(); ++j) {
      if ((v >> d->pivots[j]) & 1) {
        v ^= d->rows[j].first;
        c ^= d->rows[j].second;
      }
    }
    if (v == 0) throw InvariantViolation("embedding basis is degenerate");
    const int piv = 31 - std::countl_zero(v);
    for (std::size_t j = 0; j < d->rows.size(); ++j) {
      if ((d->rows[j].first >> piv) & 1) {
        d->rows[j].first ^= v;
        d->rows[j].second ^= c;
      }
    }
    d->rows.emplace_back(v, c);
    d->pivots.push_back(piv);
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, _] = cache.emplace(key, std::move(d));
  return Embedding(it->second);
}

}  // namespace fermat
