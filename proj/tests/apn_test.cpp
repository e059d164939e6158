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

#include "fermat/apn.hpp"

#include <numeric>

#include "fermat/errors.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace fermat {
namespace {

// Oracle: direct evaluation, no table.
uint32_t eval_f(const CoeffMap& f, const Field& F, uint32_t x) {
  uint32_t acc = 0;
  for (auto [j, c] : f) {
    uint32_t p = 1;
    for (int i = 0; i < j; ++i) p = F.mul(p, x);
    acc ^= F.mul(c, p);
  }
  return acc;
}

uint64_t naive_uniformity(const CoeffMap& f, const Field& F) {
  uint64_t best = 0;
  for (uint32_t a = 1; a < F.size(); ++a)
    for (uint32_t b = 0; b < F.size(); ++b) {
      uint64_t c = 0;
      for (uint32_t x = 0; x < F.size(); ++x)
        c += (eval_f(f, F, x ^ a) ^ eval_f(f, F, x)) == b;
      best = std::max(best, c);
    }
  return best;
}

TEST(DiffSpectrumTest, Examples) {
  Field F16 = make_field(4);
  EXPECT_EQ(naive_uniformity({{3, 1}}, make_field(3)), 2u);
  auto s = diff_spectrum({{3, 1}}, F16);
  EXPECT_EQ(s.uniformity, naive_uniformity({{3, 1}}, F16));
  EXPECT_EQ(s.uniformity, 2u);
  EXPECT_TRUE(s.is_apn());
  for (int n : {2, 3, 5}) {
    auto sq = diff_spectrum({{2, 1}}, make_field(n));
    EXPECT_EQ(sq.uniformity, uint64_t{1} << n);
  }
  auto s5 = diff_spectrum({{5, 1}}, F16);
  EXPECT_EQ(s5.uniformity, naive_uniformity({{5, 1}}, F16));
  EXPECT_GE(s5.uniformity, 4u);
  EXPECT_THROW(diff_spectrum({{3, 1}}, make_field(17)), CapacityError);
}

TEST(DiffSpectrumTest, HistogramShape) {
  for (int n : {3, 4, 5, 6}) {
    Field F = make_field(n);
    std::mt19937_64 rng(n);
    CoeffMap f;
    for (int j = 0; j <= 9; ++j) f[j] = testing::random_elt(F, rng);
    auto s = diff_spectrum(f, F);
    uint64_t pairs = 0, sols = 0;
    for (auto [c, k] : s.histogram) {
      EXPECT_EQ(c % 2, 0u);
      pairs += k;
      sols += c * k;
    }
    const uint64_t q = F.size();
    EXPECT_EQ(pairs, (q - 1) * q);  // every (a != 0, b) counted once
    EXPECT_EQ(sols, (q - 1) * q);   // each row sums to q
    EXPECT_EQ(diff_spectrum(f, F, 3).histogram, s.histogram);
  }
}

TEST(RodierTest, Examples) {
  auto r3 = rodier_check({{3, 1}}, make_field(3));
  EXPECT_TRUE(r3.holds);
  EXPECT_FALSE(r3.witness);
  Field F16 = make_field(4);
  auto r5 = rodier_check({{5, 1}}, F16);
  ASSERT_FALSE(r5.holds);
  ASSERT_TRUE(r5.witness);
  auto [x, y, z] = *r5.witness;
  EXPECT_EQ(eval_f({{5, 1}}, F16, x) ^ eval_f({{5, 1}}, F16, y) ^
                eval_f({{5, 1}}, F16, z) ^ eval_f({{5, 1}}, F16, x ^ y ^ z),
            0u);
  EXPECT_NE(F16.mul(F16.mul(x ^ y, x ^ z), y ^ z), 0u);
  EXPECT_FALSE(rodier_check({{2, 1}}, make_field(3)).holds);
  EXPECT_THROW(rodier_check({{3, 1}}, make_field(9)), CapacityError);
}

TEST(RodierTest, EquivalentToUniformity) {
  for (int n : {4, 5}) {
    Field F = make_field(n);
    std::mt19937_64 rng(500 + n);
    int apn = 0;
    for (int i = 0; i < 100; ++i) {
      CoeffMap f;
      const int d = 1 + static_cast<int>(rng() % 10);
      if (i % 4 == 0) {
        // a known APN core plus random affine terms keeps both verdicts
        // represented
        f[n == 5 ? 5 : 3] = 1;
        f[1] = testing::random_elt(F, rng);
        f[0] = testing::random_elt(F, rng);
      } else {
        for (int j = 0; j <= d; ++j)
          if (rng() % 2) f[j] = testing::random_elt(F, rng);
        f[d] = 1 + static_cast<uint32_t>(rng() % (F.size() - 1));
      }
      const bool r = rodier_check(f, F).holds;
      const bool a = diff_spectrum(f, F).is_apn();
      EXPECT_EQ(r, a) << format_coeff_map(f);
      apn += a;
    }
    EXPECT_GT(apn, 0);
    EXPECT_LT(apn, 100);
  }
}

TEST(ApnTest, AffineTermsDoNotMatter) {
  Field F = make_field(5);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 10; ++i) {
    CoeffMap f;
    for (int j = 2; j <= 8; ++j) f[j] = testing::random_elt(F, rng);
    CoeffMap g = f;
    g[1] ^= testing::random_elt(F, rng);
    g[0] ^= testing::random_elt(F, rng);
    EXPECT_EQ(diff_spectrum(f, F).histogram, diff_spectrum(g, F).histogram);
  }
}

TEST(ScanTest, GoldAndKasami) {
  std::vector<int> ns(9);
  std::iota(ns.begin(), ns.end(), 2);
  for (auto& e : exceptional_scan({{3, 1}}, ns)) EXPECT_TRUE(e.is_apn) << e.n;
  for (auto& e : exceptional_scan({{13, 1}}, {3, 5, 7, 9}))
    EXPECT_TRUE(e.is_apn) << e.n;
  for (auto& e : exceptional_scan({{13, 1}}, {4, 6}))
    EXPECT_FALSE(e.is_apn) << e.n;
  EXPECT_THROW(exceptional_scan({{3, 2}}, {4}), InvalidArgument);
}

}  // namespace
}  // namespace fermat
