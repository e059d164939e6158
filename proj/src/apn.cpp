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

#include <algorithm>
#include <string>
#include <thread>

#include "fermat/errors.hpp"

namespace fermat {

namespace {

using Histogram = std::map<uint64_t, uint64_t>;

void accumulate_rows(const std::vector<uint32_t>& table, uint32_t first,
                     uint32_t stride, Histogram& hist) {
  const uint32_t q = static_cast<uint32_t>(table.size());
  std::vector<uint32_t> count(q);
  for (uint32_t a = first; a < q; a += stride) {
    std::fill(count.begin(), count.end(), 0);
    for (uint32_t x = 0; x < q; ++x) ++count[table[x ^ a] ^ table[x]];
    for (uint32_t c : count) ++hist[c];
  }
}

}  // namespace

std::vector<uint32_t> evaluation_table(const CoeffMap& f, const Field& F) {
  for (auto [j, c] : f) {
    if (j < 0) throw InvalidArgument("negative exponent");
    if (!F.contains(c))
      throw InvalidArgument("coefficient outside " + F.to_string());
  }
  std::vector<uint32_t> table(F.size());
  for (uint64_t x = 0; x < F.size(); ++x) {
    uint32_t v = 0;
    for (auto [j, c] : f)
      if (c) v ^= F.mul(c, F.pow(static_cast<uint32_t>(x), j));
    table[x] = v;
  }
  return table;
}

DiffSpectrum diff_spectrum(const CoeffMap& f, const Field& F, int threads) {
  const int n = F.degree();
  if (n > kMaxSpectrumN)
    throw CapacityError("exhaustive spectrum needs n <= " +
                        std::to_string(kMaxSpectrumN) + ", got n = " +
                        std::to_string(n) + "; reduce n or subsample");
  const auto table = evaluation_table(f, F);
  const uint32_t q = static_cast<uint32_t>(F.size());
  threads = std::clamp<int>(threads, 1, std::max<uint32_t>(1, q - 1));

  // Thread i takes a = 1 + i, 1 + i + T, ...; histogram merge is a sum.
  std::vector<Histogram> parts(threads);
  if (threads == 1) {
    accumulate_rows(table, 1, 1, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i)
      pool.emplace_back(accumulate_rows, std::cref(table), 1 + i,
                        static_cast<uint32_t>(threads), std::ref(parts[i]));
    for (auto& t : pool) t.join();
  }

  DiffSpectrum s;
  s.n = n;
  for (const auto& h : parts)
    for (auto [c, k] : h) s.histogram[c] += k;
  for (auto [c, k] : s.histogram)
    if (k) s.uniformity = std::max(s.uniformity, c);
  return s;
}

RodierResult rodier_check(const CoeffMap& f, const Field& F) {
  if (F.degree() > kMaxRodierN)
    throw CapacityError("triple enumeration needs n <= " +
                        std::to_string(kMaxRodierN));
  const auto table = evaluation_table(f, F);
  const uint32_t q = static_cast<uint32_t>(F.size());
  // Both the equation and the surface are symmetric in x, y, z, so the
  // wedge x < y < z covers every point off the surface.
  for (uint32_t x = 0; x < q; ++x)
    for (uint32_t y = x + 1; y < q; ++y) {
      const uint32_t pxy = table[x] ^ table[y];
      for (uint32_t z = y + 1; z < q; ++z)
        if ((pxy ^ table[z] ^ table[x ^ y ^ z]) == 0)
          return {false, std::array<uint32_t, 3>{x, y, z}};
    }
  return {};
}

std::vector<ScanEntry> exceptional_scan(const CoeffMap& f,
                                        const std::vector<int>& ns,
                                        int threads) {
  for (auto [j, c] : f)
    if (c > 1) throw InvalidArgument("scan needs coefficients in GF(2)");
  std::vector<ScanEntry> out;
  for (int n : ns) {
    const DiffSpectrum s = diff_spectrum(f, make_field(n), threads);
    out.push_back({n, s.is_apn(), s.uniformity});
  }
  return out;
}

}  // namespace fermat
