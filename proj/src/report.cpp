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

#include "fermat/report.hpp"

namespace fermat {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kSkipped:
      return "skipped";
  }
  return "?";
}

Json Report::to_json(bool include_runtime) const {
  Json j;
  j["name"] = name;
  j["hypotheses"] = hypotheses;
  j["verdict"] = to_string(verdict);
  if (!reason.empty()) j["reason"] = reason;
  j["witnesses"] = witnesses;
  if (include_runtime) j["runtime_seconds"] = runtime_seconds;
  return j;
}

}  // namespace fermat
