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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fermat {

namespace detail {
struct FieldData;
struct EmbeddingData;
}  // namespace detail

// GF(2^m) in a polynomial basis, 1 <= m <= 32. An element is the bit-vector
// of its coordinates: bit i is the coefficient of X^i, X the class of x
// modulo the defining polynomial.
//
// Instances are cheap handles onto shared immutable data; two handles built
// from the same (m, modulus) compare equal and share their tables.
class Field {
 public:
  static constexpr int kMaxDegree = 32;

  // GF(2) with modulus x + 1.
  Field();

  // Builds GF(2^m). Without a modulus the numerically least irreducible
  // polynomial of degree m is used (x + 1 when m = 1). Throws
  // InvalidArgument for an out-of-range m or a modulus that is reducible
  // or of the wrong degree.
  static Field make(int m, std::optional<uint64_t> modulus = std::nullopt);

  // Parses "gf2", "gf2^m" or "gf2^m/<modulus-hex>".
  static Field parse(std::string_view text);

  int degree() const;
  uint64_t modulus() const;
  // Number of elements, 2^m.
  uint64_t size() const;
  uint32_t mask() const;

  uint32_t add(uint32_t a, uint32_t b) const { return a ^ b; }
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t sqr(uint32_t a) const { return mul(a, a); }
  // Throws DivisionByZero on a == 0.
  uint32_t inv(uint32_t a) const;
  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
  uint32_t pow(uint32_t a, uint64_t e) const;
  // Unique square root (the Frobenius map is a bijection).
  uint32_t sqrt(uint32_t a) const;
  // Absolute trace to GF(2).
  uint32_t trace(uint32_t a) const;

  bool contains(uint32_t a) const { return a <= mask(); }

  // "gf2^m/<modulus-hex>".
  std::string to_string() const;

  // Table-driven fast path: when present, log/exp tables cover every
  // nonzero element and exp has length 2 * (2^m - 1).
  bool has_tables() const;
  const uint32_t* log_table() const;
  const uint32_t* exp_table() const;

  friend bool operator==(const Field& a, const Field& b);
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data);
  std::shared_ptr<const detail::FieldData> d_;
};

// GF(2^m) for the default modulus; equivalent to Field::make(m).
Field make_field(int m, std::optional<uint64_t> modulus = std::nullopt);

// The field GF(2^(base.degree() * e)) with its default modulus.
Field extension_field(const Field& base, int e);

// An element carrying its field. Arithmetic between different fields
// throws ContextMismatch.
class FFElt {
 public:
  FFElt() = default;
  FFElt(Field field, uint32_t value);

  const Field& field() const { return field_; }
  uint32_t value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  FFElt operator+(const FFElt& o) const;
  FFElt operator-(const FFElt& o) const { return *this + o; }
  FFElt operator*(const FFElt& o) const;
  FFElt operator/(const FFElt& o) const;
  FFElt& operator+=(const FFElt& o) { return *this = *this + o; }
  FFElt& operator*=(const FFElt& o) { return *this = *this * o; }

  FFElt inv() const;
  FFElt pow(uint64_t e) const;

  // Lowercase hex of the coordinate bit-vector.
  std::string to_hex() const;
  static FFElt from_hex(const Field& field, std::string_view hex);

  friend bool operator==(const FFElt& a, const FFElt& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }
  friend bool operator!=(const FFElt& a, const FFElt& b) { return !(a == b); }

 private:
  Field field_;
  uint32_t value_ = 0;
};

enum class FieldOp { kAdd, kMul, kInv, kPow };

// Dispatching form of the element operations. For kInv the second operand
// is ignored; for kPow it is read as an unsigned exponent.
FFElt field_arith(const FFElt& a, const FFElt& b, FieldOp op);

// [a, a^2, a^4, ...] up to the first repetition.
std::vector<FFElt> frobenius_orbit(const FFElt& a);

// Injective ring morphism GF(2^a) -> GF(2^b), a | b, sending the class of x
// to the numerically least root of the source modulus in the target.
class Embedding {
 public:
  const Field& sub() const;
  const Field& sup() const;
  // Image of the class of x.
  uint32_t root() const;

  uint32_t apply(uint32_t a) const;
  FFElt operator()(const FFElt& a) const;
  // Inverse on the image; nullopt when b is outside the embedded subfield.
  std::optional<uint32_t> preimage(uint32_t b) const;

 private:
  friend Embedding embed(const Field& sub, const Field& sup);
  explicit Embedding(std::shared_ptr<const detail::EmbeddingData> data);
  std::shared_ptr<const detail::EmbeddingData> d_;
};

// Throws InvalidArgument when sub.degree() does not divide sup.degree().
Embedding embed(const Field& sub, const Field& sup);

// GF(2)[x] helpers on packed bit-vectors (bit i = coefficient of x^i).
namespace gf2x {

int degree(uint64_t p);
uint64_t mulmod(uint64_t a, uint64_t b, uint64_t mod);
uint64_t gcd(uint64_t a, uint64_t b);
bool is_irreducible(uint64_t p);
uint64_t least_irreducible(int m);
std::string to_string(uint64_t p);

}  // namespace gf2x

}  // namespace fermat
