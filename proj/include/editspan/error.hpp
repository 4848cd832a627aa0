// Copyright 2026 The editspan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EDITSPAN_ERROR_HPP_
#define EDITSPAN_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace editspan {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user configuration: unknown provider, malformed weights file, ...
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Input data that cannot be processed (unreadable corpus, missing
// annotations, insufficient records to sample from).
class DataError : public Error {
 public:
  using Error::Error;
};

// A caller broke a documented precondition (for example, applying a script
// to a sentence of the wrong length).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace editspan

#endif  // EDITSPAN_ERROR_HPP_
