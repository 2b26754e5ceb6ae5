/*
 *   Copyright 2026 The cohfin Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace cohfin {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input exceeds a configured enumeration cap or the hard web limit.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// A precondition or oracle contract was violated (unknown label,
/// asymmetric oracle, non-anticlique relation, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Two objects that must share a web do not.
class WebMismatchError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive computation was refused because it exceeds its budget.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace cohfin
