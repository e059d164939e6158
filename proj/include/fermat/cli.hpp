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

#include <iosfwd>

namespace fermat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

// Version tag written into every emitted record.
inline constexpr const char* kSchema = "fermat-apn/1";

// Parses argv (argv[0] is the program name), runs one subcommand and writes
// its records to out and diagnostics to err. Never calls exit().
int dispatch(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace fermat::cli
