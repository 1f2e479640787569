// Copyright 2026 The indist Authors
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

namespace indist {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters outside the domain of a formula or construction.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Values of incompatible kinds or arities were combined.
class KindError : public Error {
 public:
  using Error::Error;
};

/// Probabilities that do not sum to exactly one.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// A pushforward map was undefined on a support point.
class MappingError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rationals, distribution files, flags).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The requested work exceeds a configured enumeration or precision budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace indist
