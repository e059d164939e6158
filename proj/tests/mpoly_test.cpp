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

#include "fermat/bipoly.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace fermat {
namespace {

MPoly P(const Field& f, std::string_view s) { return MPoly::parse(f, s); }

TEST(MPolyTest, ParseAndPrint) {
  Field F = make_field(2);
  MPoly a = P(F, "y*x + 3*x^2 + 1 + x*x");
  EXPECT_EQ(a.to_string(), "2*x^2+x*y+1");
  EXPECT_EQ(P(F, a.to_string()), a);
  EXPECT_EQ(P(F, "x · y"), P(F, "x*y"));
  EXPECT_EQ(MPoly(F).to_string(), "0");
  EXPECT_EQ(P(F, "x^2 + x^2"), MPoly(F));
  EXPECT_THROW(P(F, "x^"), InvalidArgument);
  EXPECT_THROW(P(F, "4*x"), InvalidArgument);  // outside GF(4)
}

TEST(MPolyTest, SmallExamples) {
  Field F = make_field(1);
  MPoly s = P(F, "x+y");
  EXPECT_TRUE((s + s).is_zero());
  MPoly prod = P(F, "x+y") * P(F, "x+z") * P(F, "y+z");
  EXPECT_EQ(prod, P(F, "x^2*y + x^2*z + x*y^2 + y^2*z + x*z^2 + y*z^2"));
  EXPECT_EQ(poly_arith(prod, MPoly::constant(F, 1), PolyOp::kMul), prod);
  EXPECT_THROW(poly_arith(prod, MPoly::constant(make_field(2), 1), PolyOp::kAdd),
               ContextMismatch);
}

TEST(MPolyTest, DivideExact) {
  Field F = make_field(1);
  MPoly den = P(F, "x+y") * P(F, "x+z") * P(F, "y+z");
  EXPECT_EQ(divide_exact(den, P(F, "x+y")), P(F, "x+z") * P(F, "y+z"));
  MPoly num = P(F, "x^3+y^3+z^3") + P(F, "x+y+z").pow(3);
  EXPECT_EQ(divide_exact(num, den), MPoly::constant(F, 1));
  try {
    divide_exact(P(F, "x^2+x*y+1"), P(F, "x+y"));
    FAIL() << "expected NonExactDivision";
  } catch (const NonExactDivision& e) {
    EXPECT_FALSE(e.remainder().is_zero());
  }
  EXPECT_THROW(divide_exact(den, MPoly(F)), DivisionByZero);
}

TEST(MPolyTest, Substitute) {
  Field F = make_field(1);
  MPoly one = MPoly::constant(F, 1);
  MPoly xp1 = P(F, "x+1");
  EXPECT_EQ(substitute(P(F, "x+y"), Var::kX, xp1), P(F, "x+y+1"));
  EXPECT_EQ(substitute(P(F, "x^2"), Var::kX, xp1), P(F, "x^2+1"));
  EXPECT_EQ(substitute(P(F, "x*z^2+y*z+z"), Var::kZ, one), P(F, "x+y+1"));
  EXPECT_EQ(swap_xy(P(F, "x^2*y+z")), P(F, "x*y^2+z"));
}

TEST(MPolyTest, HomogeneousParts) {
  Field F = make_field(1);
  auto h = homogeneous_parts(P(F, "x^2+x*y+x+1"));
  ASSERT_EQ(h.parts.size(), 3u);
  EXPECT_EQ(h.parts[0].first, 2);
  EXPECT_EQ(h.parts[0].second, P(F, "x^2+x*y"));
  EXPECT_EQ(h.parts[1].second, P(F, "x"));
  EXPECT_EQ(h.parts[2].second, P(F, "1"));
  EXPECT_TRUE(h.part(F, 5).is_zero());
  EXPECT_EQ(homogeneous_parts(P(F, "x*y+z^2")).parts.size(), 1u);
  EXPECT_TRUE(is_homogeneous(P(F, "x*y+z^2")));
  EXPECT_FALSE(is_homogeneous(P(F, "x*y+z")));
}

TEST(MPolyTest, Symmetric) {
  Field F = make_field(1);
  EXPECT_TRUE(is_symmetric(P(F, "x+y")));
  EXPECT_FALSE(is_symmetric(P(F, "x^2*y")));
  EXPECT_THROW(is_symmetric(P(F, "x+z")), InvalidArgument);
}

TEST(MPolyTest, FieldMoves) {
  Field f4 = make_field(2), f16 = make_field(4);
  Embedding e = embed(f4, f16);
  MPoly a = P(f4, "2*x^2+3*x*y+1");
  MPoly up = a.map(e);
  EXPECT_EQ(up.descend(e), a);
  EXPECT_FALSE(P(f16, "4*x").descend(e).has_value());
  EXPECT_EQ(a.frobenius(2), a);  // Frobenius of order 2 on GF(4)
  EXPECT_EQ(a.frobenius(1), P(f4, "3*x^2+2*x*y+1"));
}

class RingAxioms : public ::testing::TestWithParam<int> {};

TEST_P(RingAxioms, RandomTriples) {
  Field F = make_field(GetParam());
  std::mt19937_64 rng(GetParam());
  for (int i = 0; i < 60; ++i) {
    MPoly a = testing::random_mpoly(F, 5, 6, rng, true);
    MPoly b = testing::random_mpoly(F, 5, 6, rng, true);
    MPoly c = testing::random_mpoly(F, 5, 6, rng, true);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_TRUE((a + a).is_zero());
    if (!b.is_zero()) EXPECT_EQ(divide_exact(a * b, b), a);
    // evaluation is a ring morphism
    uint32_t x = testing::random_elt(F, rng), y = testing::random_elt(F, rng),
             z = testing::random_elt(F, rng);
    EXPECT_EQ((a * b).eval(x, y, z), F.mul(a.eval(x, y, z), b.eval(x, y, z)));
    auto h = homogeneous_parts(a);
    EXPECT_EQ(h.sum(F), a);
    for (auto& [d, part] : h.parts) {
      EXPECT_TRUE(is_homogeneous(part));
      EXPECT_EQ(part.total_degree(), d);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, RingAxioms, ::testing::Values(1, 2, 5));

TEST(BiPolyTest, RoundTripAndTransforms) {
  Field F = make_field(3);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    MPoly a = testing::random_mpoly(F, 7, 8, rng);
    BiPoly b = BiPoly::from_mpoly(a);
    EXPECT_EQ(b.to_mpoly(), a);
    EXPECT_EQ(b.transpose().to_mpoly(), swap_xy(a));
    uint32_t c = testing::random_elt(F, rng);
    MPoly lam_x = MPoly::variable(F, Var::kX).scale(c);
    EXPECT_EQ(b.shear(c).to_mpoly(),
              substitute(a, Var::kY, MPoly::variable(F, Var::kY) + lam_x));
    EXPECT_EQ(b.shift_y(c).to_mpoly(),
              substitute(a, Var::kY, P(F, "y") + MPoly::constant(F, c)));
    BiPoly sq = b * b;
    EXPECT_EQ(sq.sqrt(), b);
    EXPECT_EQ(bi_divide_exact(sq, b), b);
  }
}

// Factor-disjoint construction: distinct monic-in-x linear forms in x are
// pairwise coprime irreducibles.
MPoly linear_product(const Field& F, const std::vector<uint32_t>& shifts,
                     bool swap) {
  MPoly r = MPoly::constant(F, 1);
  for (uint32_t s : shifts) {
    MPoly l = P(F, "x") + P(F, "y^2").scale(s) + MPoly::constant(F, s);
    r *= swap ? swap_xy(l) : l;
  }
  return r;
}

TEST(GcdTest, Examples) {
  Field F = make_field(2);
  MPoly f = P(F, "2*x^2*y+x+1");
  EXPECT_EQ(gcd_bivariate(f, MPoly(F)), f.normalized());
  EXPECT_EQ(gcd_bivariate(MPoly(F), f), f.normalized());
  EXPECT_THROW(gcd_bivariate(MPoly(F), MPoly(F)), InvalidArgument);
  EXPECT_THROW(gcd_bivariate(P(F, "z"), f), InvalidArgument);

  MPoly u = linear_product(F, {1, 2}, false);
  MPoly v = linear_product(F, {0, 3}, false) * P(F, "y+1");
  MPoly xy = P(F, "x+y");
  EXPECT_EQ(gcd_bivariate(xy * u, xy * v), xy);
  EXPECT_EQ(gcd_bivariate(u, v), MPoly::constant(F, 1));
  MPoly w = linear_product(F, {2}, true);
  EXPECT_EQ(gcd_bivariate(u * w * w, v * w), w.normalized());
}

TEST(GcdTest, RandomProperties) {
  for (int m : {1, 2, 4}) {
    Field F = make_field(m);
    std::mt19937_64 rng(40 + m);
    for (int i = 0; i < 25; ++i) {
      MPoly f = testing::random_mpoly(F, 4, 5, rng);
      MPoly g = testing::random_mpoly(F, 4, 5, rng);
      MPoly h = testing::random_mpoly(F, 3, 4, rng);
      if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
      MPoly d = gcd_bivariate(f, g);
      EXPECT_NO_THROW(divide_exact(f, d));
      EXPECT_NO_THROW(divide_exact(g, d));
      EXPECT_EQ(gcd_bivariate(f * h, g * h), (d * h).normalized())
          << f.to_string() << " | " << g.to_string() << " | " << h.to_string();
    }
  }
}

}  // namespace
}  // namespace fermat
