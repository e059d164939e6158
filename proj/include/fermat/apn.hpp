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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fermat/gf2m.hpp"
#include "fermat/phi.hpp"

namespace fermat {

// Exhaustive limits: 2^(2n) difference evaluations, 2^(3n) triples.
inline constexpr int kMaxSpectrumN = 16;
inline constexpr int kMaxRodierN = 8;

struct DiffSpectrum {
  int n = 0;
  // solution count -> number of pairs (a != 0, b) attaining it, zero
  // counts included
  std::map<uint64_t, uint64_t> histogram;
  uint64_t uniformity = 0;

  bool is_apn() const { return uniformity <= 2; }
};

// Values of f on the field in integer order of the elements.
std::vector<uint32_t> evaluation_table(const CoeffMap& f, const Field& field);

// Differential spectrum of f over field = GF(2^n). The work is split over
// a-values across the given number of threads; the result does not depend
// on it. Throws CapacityError for n > kMaxSpectrumN.
DiffSpectrum diff_spectrum(const CoeffMap& f, const Field& field,
                           int threads = 1);

struct RodierResult {
  // Every rational zero of f(x)+f(y)+f(z)+f(x+y+z) lies on
  // (x+y)(x+z)(y+z) = 0.
  bool holds = true;
  // A zero off that surface when !holds.
  std::optional<std::array<uint32_t, 3>> witness;
};

// Throws CapacityError for n > kMaxRodierN.
RodierResult rodier_check(const CoeffMap& f, const Field& field);

struct ScanEntry {
  int n = 0;
  bool is_apn = false;
  uint64_t uniformity = 0;
};

// APN verdicts of f on GF(2^n) for each listed n. f must have coefficients
// in GF(2). The verdicts are finite evidence only.
std::vector<ScanEntry> exceptional_scan(const CoeffMap& f,
                                        const std::vector<int>& ns,
                                        int threads = 1);

}  // namespace fermat
