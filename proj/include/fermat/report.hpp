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

#include <string>

#include "json.hpp"

namespace fermat {

using Json = nlohmann::ordered_json;

enum class Verdict { kPass, kFail, kSkipped };

std::string to_string(Verdict v);

// Outcome of one check. A fail carries a counterexample in witnesses; a
// skip names its reason ("capacity", "hypotheses-unmet", ...).
struct Report {
  std::string name;
  Json hypotheses = Json::object();
  Verdict verdict = Verdict::kPass;
  std::string reason;
  Json witnesses = Json::object();
  double runtime_seconds = 0;

  // Runtime is left out unless asked for, so output stays byte-stable.
  Json to_json(bool include_runtime = false) const;
};

}  // namespace fermat
