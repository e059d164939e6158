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

#include <map>

#include "fermat/errors.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace fermat {
namespace {

using upoly::deg;

// Oracle: repeatedly strip the smallest-degree monic divisor found by
// enumerating all monic polynomials of increasing degree. The first divisor
// found is necessarily irreducible.
std::map<Coeffs, int> brute_factor(const Field& F, Coeffs f) {
  std::map<Coeffs, int> out;
  f = upoly::monic(F, f);
  while (deg(f) > 0) {
    bool found = false;
    for (int d = 1; 2 * d <= deg(f) && !found; ++d) {
      const uint64_t count = uint64_t{1} << (F.degree() * d);
      for (uint64_t k = 0; k < count && !found; ++k) {
        Coeffs g(d + 1, 0);
        g[d] = 1;
        uint64_t kk = k;
        for (int i = 0; i < d; ++i) {
          g[i] = static_cast<uint32_t>(kk & F.mask());
          kk >>= F.degree();
        }
        if (auto q = upoly::divide_exact(F, f, g)) {
          out[g] += 1;
          f = *q;
          found = true;
        }
      }
    }
    if (!found) {
      out[f] += 1;
      break;
    }
  }
  return out;
}

TEST(UPolyTest, Arithmetic) {
  Field F = make_field(3);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Coeffs a = testing::random_upoly(F, 6, rng);
    Coeffs b = testing::random_upoly(F, 3, rng);
    Coeffs q, r;
    upoly::divrem(F, a, b, &q, &r);
    EXPECT_LT(deg(r), deg(b));
    EXPECT_EQ(upoly::add(upoly::mul(F, q, b), r), a);
    Coeffs s, t;
    Coeffs g = upoly::xgcd(F, a, b, &s, &t);
    EXPECT_EQ(upoly::add(upoly::mul(F, s, a), upoly::mul(F, t, b)), g);
    EXPECT_EQ(g, upoly::gcd(F, a, b));
    uint32_t c = testing::random_elt(F, rng);
    uint32_t x0 = testing::random_elt(F, rng);
    EXPECT_EQ(upoly::eval(F, upoly::shift(F, a, c), x0),
              upoly::eval(F, a, x0 ^ c));
  }
  EXPECT_THROW(upoly::divrem(F, {1}, {}, nullptr, nullptr), DivisionByZero);
}

TEST(UFactorTest, SmallExamples) {
  Field F2 = make_field(1);
  auto f = univar_factor({F2, {0, 1, 1}});
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].first, (Coeffs{0, 1}));
  EXPECT_EQ(f.factors[1].first, (Coeffs{1, 1}));

  Field F4 = make_field(2);
  auto g = univar_factor({F4, {1, 1, 1}});
  ASSERT_EQ(g.factors.size(), 2u);
  EXPECT_EQ(g.factors[0].first, (Coeffs{0b10, 1}));  // x + w
  EXPECT_EQ(g.factors[1].first, (Coeffs{0b11, 1}));  // x + w^2
  EXPECT_EQ(g.factors[0].second, 1);

  EXPECT_THROW(univar_factor({F4, {}}), InvalidArgument);
}

TEST(UFactorTest, MultiplicitiesAndSquares) {
  Field F = make_field(2);
  // (x+1)^4 (x^2+x+w)^3 x^2
  Coeffs a{1, 1}, b{0b10, 1, 1}, x{0, 1};
  Coeffs f = upoly::mul(F, upoly::pow(F, a, 4),
                        upoly::mul(F, upoly::pow(F, b, 3), upoly::pow(F, x, 2)));
  f = upoly::scale(F, f, 0b11);
  auto fac = univar_factor({F, f});
  EXPECT_EQ(fac.unit, 0b11u);
  EXPECT_EQ(fac.expand(), f);
  std::map<Coeffs, int> got(fac.factors.begin(), fac.factors.end());
  EXPECT_EQ(got, brute_factor(F, f));
}

class UFactorOracle : public ::testing::TestWithParam<int> {};

TEST_P(UFactorOracle, AgreesWithTrialDivision) {
  Field F = make_field(GetParam());
  std::mt19937_64 rng(100 + GetParam());
  for (int i = 0; i < 150; ++i) {
    const int d = 1 + static_cast<int>(rng() % 8);
    Coeffs f = testing::random_upoly(F, d, rng);
    auto fac = univar_factor({F, f}, rng());
    EXPECT_EQ(fac.expand(), f);
    std::map<Coeffs, int> got(fac.factors.begin(), fac.factors.end());
    EXPECT_EQ(got, brute_factor(F, f)) << upoly::to_string(f);
    // sorted canonically and independent of the seed
    EXPECT_TRUE(std::is_sorted(
        fac.factors.begin(), fac.factors.end(),
        [](auto& a, auto& b) { return upoly::canonical_less(a.first, b.first); }));
    EXPECT_EQ(univar_factor({F, f}, 99).factors, fac.factors);
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, UFactorOracle, ::testing::Values(1, 2));

TEST(UFactorTest, LargerFields) {
  for (int m : {7, 17, 26}) {
    Field F = make_field(m);
    std::mt19937_64 rng(m);
    for (int i = 0; i < 5; ++i) {
      Coeffs a = testing::random_upoly(F, 5, rng, true);
      Coeffs b = testing::random_upoly(F, 7, rng, true);
      Coeffs f = upoly::mul(F, upoly::mul(F, a, b), a);
      auto fac = univar_factor({F, f}, i);
      EXPECT_EQ(fac.expand(), f);
      for (auto& [p, e] : fac.factors) {
        // each factor irreducible: its own factorization is trivial
        auto sub = univar_factor({F, p});
        ASSERT_EQ(sub.factors.size(), 1u);
        EXPECT_EQ(sub.factors[0].second, 1);
      }
    }
  }
}

TEST(RootsTest, FindsAllRoots) {
  Field F = make_field(5);
  Coeffs f{1};
  for (uint32_t r : {3u, 9u, 17u}) f = upoly::mul(F, f, Coeffs{r, 1});
  f = upoly::mul(F, f, Coeffs{1, 1, 0, 1});  // x^3+x+1: no roots in GF(32)
  EXPECT_EQ(find_roots(F, f), (std::vector<uint32_t>{3, 9, 17}));
}

}  // namespace
}  // namespace fermat
