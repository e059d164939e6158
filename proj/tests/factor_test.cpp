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

#include "fermat/factor.hpp"

#include <algorithm>

#include "fermat/phi.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace fermat {
namespace {

MPoly P(const Field& f, std::string_view s) { return MPoly::parse(f, s); }

MPoly phi(int d, const Field& F) { return affine_part(build_phi_j(d, F)); }

// Oracle: f of total degree <= 5 is irreducible iff no polynomial of total
// degree 1 or 2 divides it. Enumerates every coefficient vector.
bool brute_irreducible(const MPoly& f) {
  const Field& F = f.field();
  const int D = f.total_degree();
  const BiPoly b = BiPoly::from_mpoly(f);
  for (int d = 1; 2 * d <= D; ++d) {
    std::vector<Monomial> monos;
    for (uint32_t t = 0; t <= static_cast<uint32_t>(d); ++t)
      for (uint32_t x = 0; x <= t; ++x) monos.push_back({x, t - x, 0});
    const uint64_t total = uint64_t{1} << (F.degree() * monos.size());
    for (uint64_t code = 1; code < total; ++code) {
      std::vector<Term> terms;
      uint64_t c = code;
      for (const auto& mono : monos) {
        terms.push_back({mono, static_cast<uint32_t>(c & F.mask())});
        c >>= F.degree();
      }
      MPoly g = MPoly::from_terms(F, terms);
      if (g.total_degree() != d || g.leading().coeff != 1) continue;
      if (bi_divide_exact(b, BiPoly::from_mpoly(g))) return false;
    }
  }
  return true;
}

using FactorList = std::vector<std::pair<std::string, int>>;

FactorList as_list(const Factorization& f) {
  FactorList out;
  for (auto& [p, m] : f.factors) out.emplace_back(p.to_string(), m);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(BivarFactorTest, Lines) {
  Field F = make_field(1);
  auto fac = bivar_factor(P(F, "x+y") * P(F, "x+y+1"));
  ASSERT_EQ(fac.factors.size(), 2u);
  EXPECT_EQ(fac.factors[0].first, P(F, "x+y"));
  EXPECT_EQ(fac.factors[1].first, P(F, "x+y+1"));
  EXPECT_EQ(fac.unit, 1u);
}

TEST(BivarFactorTest, Phi13) {
  Field F4 = make_field(2);
  auto over4 = bivar_factor(phi(13, F4));
  ASSERT_EQ(over4.factors.size(), 2u);
  for (auto& [p, m] : over4.factors) {
    EXPECT_EQ(p.total_degree(), 5);
    EXPECT_EQ(m, 1);
  }
  // the two factors are Frobenius conjugates
  EXPECT_EQ(over4.factors[0].first.frobenius(1), over4.factors[1].first);
  auto over2 = bivar_factor(phi(13, make_field(1)));
  ASSERT_EQ(over2.factors.size(), 1u);
  EXPECT_EQ(over2.factors[0].first, phi(13, make_field(1)));
}

TEST(BivarFactorTest, UnivariateSpecialization) {
  Field F4 = make_field(2);
  Coeffs at0 = BiPoly::from_mpoly(phi(13, F4)).eval_y(0);
  auto fac = univar_factor({F4, at0});
  ASSERT_EQ(fac.factors.size(), 2u);
  EXPECT_EQ(fac.factors[0], (std::pair<Coeffs, int>{{0b10, 1}, 5}));
  EXPECT_EQ(fac.factors[1], (std::pair<Coeffs, int>{{0b11, 1}, 5}));
}

TEST(BivarFactorTest, MultiplicitiesAndContents) {
  Field F = make_field(2);
  MPoly a = P(F, "x^2+2*x*y+y+1"), b = P(F, "x*y+3"), cy = P(F, "y^2+y+2"),
        cx = P(F, "x+1");
  MPoly f = (a.pow(3) * b.pow(2) * cy * cx.pow(4)).scale(3);
  auto fac = bivar_factor(f);
  EXPECT_EQ(fac.expand(), f);
  EXPECT_EQ(fac.unit, 3u);
  EXPECT_EQ(fac.count(), 3 + 2 + 1 + 4);
  FactorList want{{a.normalized().to_string(), 3},
                  {b.normalized().to_string(), 2},
                  {cy.to_string(), 1},
                  {cx.to_string(), 4}};
  std::sort(want.begin(), want.end());
  ASSERT_TRUE(brute_irreducible(a));
  ASSERT_TRUE(brute_irreducible(b));
  EXPECT_EQ(as_list(fac), want);
  // squares in both variables
  MPoly sq = P(F, "x^2*y^2+x^2+2");
  EXPECT_EQ(bivar_factor(sq).expand(), sq);
  EXPECT_EQ(bivar_factor(sq).count(), 2);
}

TEST(BivarFactorTest, Errors) {
  Field F = make_field(1);
  EXPECT_THROW(bivar_factor(MPoly(F)), InvalidArgument);
  EXPECT_THROW(bivar_factor(P(F, "x*z")), InvalidArgument);
  FactorOptions tight;
  tight.budget = 0;
  const MPoly q = P(F, "x^2+x*y+y^2+x+1");
  ASSERT_TRUE(brute_irreducible(q));
  try {
    bivar_factor(P(F, "x+y") * P(F, "x+y+1") * q, tight);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.budget(), 0u);
    EXPECT_GE(e.modular_factors(), 2);
  }
}

class ProductOracle : public ::testing::TestWithParam<int> {};

TEST_P(ProductOracle, RecoversConstructedFactors) {
  Field F = make_field(GetParam());
  std::mt19937_64 rng(77 + GetParam());
  // pool of certified irreducibles of total degree 2..4
  std::vector<MPoly> pool;
  while (pool.size() < 12) {
    const int d = 2 + static_cast<int>(rng() % 3);
    MPoly g = testing::random_mpoly(F, d, 2 + d, rng);
    if (g.total_degree() < 2 || g.degree(Var::kX) == 0 || g.degree(Var::kY) == 0)
      continue;
    g = g.normalized();
    if (std::find(pool.begin(), pool.end(), g) != pool.end()) continue;
    if (brute_irreducible(g)) pool.push_back(g);
  }
  for (int i = 0; i < 12; ++i) {
    std::map<std::string, int> want;
    MPoly f = MPoly::constant(F, 1);
    const int parts = 2 + static_cast<int>(rng() % 3);
    for (int j = 0; j < parts; ++j) {
      const MPoly& g = pool[rng() % pool.size()];
      f *= g;
      want[g.to_string()] += 1;
    }
    auto fac = bivar_factor(f, {.seed = rng()});
    EXPECT_EQ(fac.expand(), f);
    std::map<std::string, int> got;
    for (auto& [p, m] : fac.factors) got[p.to_string()] += m;
    EXPECT_EQ(got, want) << f.to_string();
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, ProductOracle, ::testing::Values(1, 2));

TEST(BivarFactorTest, LargerRandomProducts) {
  for (int m : {1, 3, 8}) {
    Field F = make_field(m);
    std::mt19937_64 rng(300 + m);
    for (int i = 0; i < 6; ++i) {
      MPoly f = MPoly::constant(F, 1);
      for (int j = 0; j < 3; ++j) {
        MPoly g = testing::random_mpoly(F, 6, 8, rng);
        if (!g.is_zero()) f *= g;
      }
      if (f.is_constant()) continue;
      auto fac = bivar_factor(f);
      EXPECT_EQ(fac.expand(), f);
      for (auto& [p, mult] : fac.factors) {
        EXPECT_EQ(p.leading().coeff, 1u);
        EXPECT_EQ(bivar_factor(p).count(), 1) << p.to_string();
      }
      EXPECT_TRUE(std::is_sorted(
          fac.factors.begin(), fac.factors.end(),
          [](auto& a, auto& b) { return canonical_less(a.first, b.first); }));
    }
  }
}

TEST(BivarFactorTest, SeedIndependent) {
  Field F = make_field(2);
  MPoly f = phi(13, F) * P(F, "x+y+1");
  EXPECT_EQ(as_list(bivar_factor(f, {.seed = 1})),
            as_list(bivar_factor(f, {.seed = 12345})));
}

TEST(KasamiTest, Structure) {
  for (int k : {2, 3}) {
    const Field E = make_field(k);
    auto fac = kasami_lift_factor(k);
    const auto roots = kasami_roots(k);
    ASSERT_EQ(fac.factors.size(), static_cast<std::size_t>((1 << k) - 2));
    MPoly prod = MPoly::constant(E, 1);
    for (std::size_t i = 0; i < fac.factors.size(); ++i) {
      const MPoly& p = fac.factors[i].first;
      EXPECT_EQ(p.total_degree(), (1 << k) + 1);
      // P_a(x, 0) = (x + a)^(2^k + 1), oracle by repeated multiplication
      Coeffs want{1};
      for (int j = 0; j <= (1 << k); ++j)
        want = upoly::mul(E, want, Coeffs{roots[i], 1});
      EXPECT_EQ(BiPoly::from_mpoly(p).eval_y(0), want);
      for (std::size_t j = 0; j < i; ++j)
        EXPECT_NE(p, fac.factors[j].first);
      prod *= p;
    }
    EXPECT_EQ(prod, phi((1 << (2 * k)) - (1 << k) + 1, E));
  }
  EXPECT_THROW(kasami_lift_factor(1), InvalidArgument);
  EXPECT_THROW(kasami_lift_factor(5), InvalidArgument);
}

TEST(KasamiTest, AgreesWithGeneralPath) {
  auto fast = kasami_lift_factor(2);
  auto general = bivar_factor(fast.expand());
  EXPECT_EQ(as_list(fast), as_list(general));
}

TEST(AbsIrredTest, Examples) {
  Field F = make_field(1);
  auto r5 = absolutely_irreducible(phi(5, F));
  EXPECT_FALSE(r5.absolutely_irreducible);
  ASSERT_TRUE(r5.splitting);
  EXPECT_EQ(r5.splitting->field, make_field(2));
  EXPECT_EQ(r5.splitting->count(), 2);
  for (auto& [p, m] : r5.splitting->factors) EXPECT_EQ(p.total_degree(), 1);

  auto r7 = absolutely_irreducible(phi(7, F));
  EXPECT_TRUE(r7.absolutely_irreducible);
  EXPECT_FALSE(r7.splitting);

  auto r13 = absolutely_irreducible(phi(13, F));
  EXPECT_FALSE(r13.absolutely_irreducible);
  ASSERT_TRUE(r13.splitting);
  EXPECT_EQ(r13.splitting->count(), 2);

  EXPECT_THROW(absolutely_irreducible(P(F, "1")), InvalidArgument);
}

TEST(AbsIrredTest, CertificatesAgreeWithFactoring) {
  Field F = make_field(1);
  AbsIrredOptions plain;
  plain.point_certificates = false;
  for (int d = 5; d <= 31; d += 2) {
    auto a = absolutely_irreducible(phi(d, F));
    auto b = absolutely_irreducible(phi(d, F), plain);
    EXPECT_EQ(a.absolutely_irreducible, b.absolutely_irreducible) << d;
    EXPECT_TRUE(b.point_certificates.empty());
  }
}

TEST(AbsIrredTest, Invariance) {
  for (int m : {1, 2}) {
    Field F = make_field(m);
    std::mt19937_64 rng(m);
    for (int i = 0; i < 20; ++i) {
      MPoly f = i < 4 ? phi(5 + 2 * i, F) : testing::random_mpoly(F, 5, 6, rng);
      if (f.is_constant()) continue;
      const bool v = absolutely_irreducible(f).absolutely_irreducible;
      EXPECT_EQ(absolutely_irreducible(swap_xy(f)).absolutely_irreducible, v);
      const uint32_t c = testing::random_elt(F, rng);
      MPoly shifted = substitute(f, Var::kX, P(F, "x") + MPoly::constant(F, c));
      EXPECT_EQ(absolutely_irreducible(shifted).absolutely_irreducible, v);
    }
  }
}

}  // namespace
}  // namespace fermat
