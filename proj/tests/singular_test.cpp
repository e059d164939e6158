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

#include "fermat/singular.hpp"

#include "fermat/phi.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace fermat {
namespace {

MPoly P(const Field& f, std::string_view s) { return MPoly::parse(f, s); }
MPoly phi(int d, const Field& F) { return affine_part(build_phi_j(d, F)); }

// Oracle: shift with MPoly substitution and read off the least degree.
int naive_multiplicity(const MPoly& f, uint32_t px, uint32_t py) {
  const Field& F = f.field();
  MPoly g = substitute(f, Var::kX, P(F, "x") + MPoly::constant(F, px));
  g = substitute(g, Var::kY, P(F, "y") + MPoly::constant(F, py));
  int mu = g.total_degree();
  for (const auto& t : g.terms()) mu = std::min<int>(mu, t.mono.total());
  return mu;
}

// d = 2^i * l + 1 with l odd.
int hm_exponent(int d) {
  int i = 0;
  for (int v = d - 1; v % 2 == 0; v /= 2) ++i;
  return i;
}

TEST(MultiplicityTest, PhiAtOneOne) {
  Field F = make_field(1);
  auto r13 = multiplicity_at(phi(13, F), {F, 1, 1});
  EXPECT_EQ(r13.multiplicity, 2);
  EXPECT_TRUE(is_homogeneous(r13.tangent_cone));
  EXPECT_EQ(r13.tangent_cone.total_degree(), 2);
  ASSERT_EQ(r13.tangent_lines.size(), 2u);
  EXPECT_TRUE(r13.distinct_lines);
  MPoly prod = MPoly::constant(r13.split_field, 1);
  for (auto& [l, e] : r13.tangent_lines) prod *= l.pow(e);
  EXPECT_EQ(prod, r13.tangent_cone.map(embed(F, r13.split_field)).normalized());

  auto r7 = multiplicity_at(phi(7, F), {F, 1, 1});
  EXPECT_EQ(r7.multiplicity, 0);
  EXPECT_TRUE(r7.tangent_lines.empty());
  EXPECT_EQ(multiplicity_at(phi(21, F), {F, 1, 1}).multiplicity, 2);
}

TEST(MultiplicityTest, FormulaForOddD) {
  Field F = make_field(1);
  for (int d = 5; d <= 61; d += 2) {
    const int want = (1 << hm_exponent(d)) - 2;
    EXPECT_EQ(multiplicity_at(phi(d, F), {F, 1, 1}).multiplicity, want) << d;
    if (d <= 25) EXPECT_EQ(naive_multiplicity(phi(d, F), 1, 1), want) << d;
  }
}

TEST(MultiplicityTest, Additive) {
  Field F = make_field(3);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 40; ++i) {
    const uint32_t px = testing::random_elt(F, rng), py = testing::random_elt(F, rng);
    auto through = [&](MPoly g) {
      return g + MPoly::constant(F, g.eval(px, py, 0));
    };
    MPoly f = through(testing::random_mpoly(F, 4, 6, rng));
    MPoly g = i % 3 ? through(testing::random_mpoly(F, 4, 6, rng))
                    : testing::random_mpoly(F, 3, 4, rng);
    if (f.is_zero() || g.is_zero()) continue;
    auto rf = multiplicity_at(f, {F, px, py});
    auto rg = multiplicity_at(g, {F, px, py});
    auto rfg = multiplicity_at(f * g, {F, px, py});
    EXPECT_EQ(rf.multiplicity, naive_multiplicity(f, px, py));
    EXPECT_EQ(rfg.multiplicity, rf.multiplicity + rg.multiplicity);
    EXPECT_EQ(rfg.tangent_cone, rf.tangent_cone * rg.tangent_cone);
    if (rf.multiplicity >= 1) {
      EXPECT_TRUE(is_homogeneous(rf.tangent_cone));
      EXPECT_EQ(rf.tangent_cone.total_degree(), rf.multiplicity);
    }
  }
}

TEST(MultiplicityTest, ExtensionPoint) {
  Field F4 = make_field(2);
  Field F = make_field(1);
  // simple point (w, 0)
  auto r = multiplicity_at(P(F, "x^2+x+1+y"), {F4, 2, 0});
  EXPECT_EQ(r.multiplicity, 1);
  EXPECT_TRUE(r.distinct_lines);
}

TEST(EdCountTest, Examples) {
  Field F = make_field(1);
  EXPECT_EQ(ed_term_count(P(F, "x*y+1")).count, 1);
  EXPECT_TRUE(ed_term_count(P(F, "x*y+1")).odd());
  EXPECT_EQ(ed_term_count(P(F, "x^2*y^2+x*y+x+y")).count, 2);
  EXPECT_FALSE(ed_term_count(P(F, "x^2*y^2+x*y+x+y")).odd());
  EXPECT_TRUE(ed_term_count(phi(13, F)).odd());
  EXPECT_TRUE(ed_term_count(phi(57, F)).odd());
}

TEST(GroupQTest, K2) {
  auto groups = group_q_factors(2);
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_TRUE(groups[0].symmetric);
  EXPECT_EQ(groups[0].q, phi(13, make_field(1)));
  EXPECT_EQ(groups[0].q_prime, groups[0].q);
  EXPECT_EQ(groups[0].orbits[0], (std::vector<uint32_t>{2, 3}));
}

TEST(GroupQTest, K3) {
  auto groups = group_q_factors(3);
  int qs = 0;
  for (auto& g : groups) {
    for (auto& orb : g.orbits) EXPECT_EQ(orb.size(), 3u);
    EXPECT_EQ(g.q.total_degree(), 27);
    qs += g.mirror ? 2 : 1;
    EXPECT_EQ(g.q_prime.constant_term(), 1u);
    EXPECT_TRUE(ed_term_count(g.q_prime).odd());
  }
  EXPECT_EQ(qs, 2);
}

TEST(TransversalityTest, SmallK) {
  for (int k : {2, 3}) {
    Report r = transversality_check(k);
    EXPECT_EQ(r.verdict, Verdict::kPass) << r.to_json().dump();
    EXPECT_EQ(r.witnesses["components"].size(), (1u << k) - 2);
    EXPECT_EQ(r.witnesses["phi_multiplicity"], (1 << k) - 2);
    EXPECT_TRUE(r.witnesses["distinct_tangents"].get<bool>());
  }
  EXPECT_THROW(transversality_check(1), InvalidArgument);
}

}  // namespace
}  // namespace fermat
