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

#include <stdexcept>
#include <string>

namespace fermat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad modulus, unparsable polynomial, degenerate argument.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Operands live in different fields.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// The request exceeds an exhaustive-search capacity or a work budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// An internal algebraic identity failed. Seeing one means a bug, or a
// counterexample to a result the toolkit assumes.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace fermat
