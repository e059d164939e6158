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

#include "fermat/phi.hpp"

#include <charconv>
#include <mutex>
#include <sstream>
#include <string>
#include <tuple>

namespace fermat {

namespace {

// (x+y+z)^j over GF(2): the multinomial coefficient is odd exactly when the
// exponents split the bits of j, so the terms are the ordered 3-partitions of
// the bit set of j.
void add_trinomial_power(int j, uint32_t c, std::vector<Term>& out) {
  const uint32_t bits = static_cast<uint32_t>(j);
  for (uint32_t a = bits;; a = (a - 1) & bits) {
    const uint32_t rest = bits & ~a;
    for (uint32_t b = rest;; b = (b - 1) & rest) {
      out.push_back({{a, b, rest & ~b}, c});
      if (b == 0) break;
    }
    if (a == 0) break;
  }
}

MPoly denominator(const Field& F) {
  // (x+y)(x+z)(y+z) = x^2y + x^2z + xy^2 + y^2z + xz^2 + yz^2
  std::vector<Term> t = {{{2, 1, 0}, 1}, {{2, 0, 1}, 1}, {{1, 2, 0}, 1},
                         {{0, 2, 1}, 1}, {{1, 0, 2}, 1}, {{0, 1, 2}, 1}};
  return MPoly::from_terms(F, std::move(t));
}

MPoly numerator(const CoeffMap& f, const Field& F) {
  std::vector<Term> terms;
  for (auto [j, c] : f) {
    if (c == 0) continue;
    const uint32_t e = static_cast<uint32_t>(j);
    terms.push_back({{e, 0, 0}, c});
    terms.push_back({{0, e, 0}, c});
    terms.push_back({{0, 0, e}, c});
    add_trinomial_power(j, c, terms);
  }
  return MPoly::from_terms(F, std::move(terms));
}

MPoly divide_phi(const MPoly& num) {
  try {
    return divide_exact(num, denominator(num.field()));
  } catch (const NonExactDivision& e) {
    throw InvariantViolation(std::string("phi numerator not divisible: ") +
                             e.what());
  }
}

struct PhiCache {
  std::mutex mu;
  std::map<std::tuple<int, int, uint64_t>, MPoly> entries;
};

PhiCache& cache() {
  static PhiCache c;
  return c;
}

}  // namespace

CoeffMap parse_coeff_map(const Field& field, std::string_view text) {
  CoeffMap out;
  std::string_view rest = text;
  auto bad = [&] {
    return InvalidArgument("bad coefficient map '" + std::string(text) +
                           "', expected d:hex,d:hex,...");
  };
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{}
                                           : rest.substr(comma + 1);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw bad();
    int d = 0;
    uint64_t c = 0;
    auto ds = item.substr(0, colon), cs = item.substr(colon + 1);
    if (ds.empty() || cs.empty()) throw bad();
    auto r1 = std::from_chars(ds.data(), ds.data() + ds.size(), d);
    auto r2 = std::from_chars(cs.data(), cs.data() + cs.size(), c, 16);
    if (r1.ec != std::errc{} || r1.ptr != ds.data() + ds.size() ||
        r2.ec != std::errc{} || r2.ptr != cs.data() + cs.size() || d < 0)
      throw bad();
    if (c > field.mask())
      throw InvalidArgument("coefficient " + std::string(cs) + " outside " +
                            field.to_string());
    out[d] ^= static_cast<uint32_t>(c);
  }
  if (out.empty()) throw bad();
  return out;
}

std::string format_coeff_map(const CoeffMap& f) {
  std::ostringstream os;
  bool first = true;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    if (it->second == 0) continue;
    if (!first) os << ',';
    os << it->first << ':' << std::hex << it->second << std::dec;
    first = false;
  }
  return os.str();
}

MPoly build_phi_j(int j, const Field& field) {
  if (j < 3) throw InvalidArgument("phi_j needs j >= 3");
  const auto key = std::make_tuple(j, field.degree(), field.modulus());
  PhiCache& c = cache();
  {
    std::lock_guard lock(c.mu);
    if (auto it = c.entries.find(key); it != c.entries.end()) return it->second;
  }
  // Computed outside the lock; a concurrent duplicate inserts the same value.
  MPoly phi = divide_phi(numerator({{j, 1}}, field));
  std::lock_guard lock(c.mu);
  return c.entries.emplace(key, std::move(phi)).first->second;
}

MPoly build_phi_f(const CoeffMap& f, const Field& field,
                  const PhiOptions& opts) {
  CoeffMap high;
  for (auto [j, c] : f) {
    if (!field.contains(c))
      throw InvalidArgument("coefficient outside " + field.to_string());
    if (j >= 3 && c != 0) high[j] = c;
  }
  if (high.empty())
    throw InvalidArgument("degenerate f: no nonzero a_j with j >= 3");

  MPoly combo(field);
  for (auto [j, c] : high) combo += build_phi_j(j, field).scale(c);
  if (opts.fast) return combo;

  // Terms of degree <= 2 cancel in the numerator, so f may be used as is.
  MPoly direct = divide_phi(numerator(f, field));
  if (direct != combo)
    throw InvariantViolation("phi constructions disagree for f = " +
                             format_coeff_map(f));
  return direct;
}

MPoly affine_part(const MPoly& phi) {
  return substitute(phi, Var::kZ, MPoly::constant(phi.field(), 1));
}

}  // namespace fermat
