// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PSM_ERRORS_H_
#define PSM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace psm {

// Base class for every error raised by the library. Callers that only care
// about "something went wrong" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An item or function index outside its valid range.
class IndexError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold (e.g. asking for
// the marginal gain of an item already in the set).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A candidate set violates the cardinality bound of the instance.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed a configured budget. The message names the
// budget and the size that was requested.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Malformed argument values (empty candidate lists, negative weights, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A serialized file could not be parsed or failed validation.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace psm

#endif  // PSM_ERRORS_H_
