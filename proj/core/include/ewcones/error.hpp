// Copyright 2026 The ewcones Authors
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

#ifndef EWCONES_ERROR_HPP_
#define EWCONES_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ewcones {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions do not fit the operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the mathematical domain of the operation
/// (n < 2, epsilon <= 0, p outside [0,1], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input failed a structural check such as Hermiticity or positivity.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace ewcones

#endif  // EWCONES_ERROR_HPP_
