// Copyright 2026 The frakpascal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace frakpascal {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The order is non-finite, zero, or a negative integer.
class InvalidOrder : public Error {
 public:
  using Error::Error;
};

/// An exact integer evaluation was requested outside the exact range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation was violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A brute-force enumeration exceeds its configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace frakpascal
