// Copyright 2026 The sqfree Authors
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

#ifndef SQFREE_ERRORS_HPP_
#define SQFREE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace sqfree {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller passed an argument outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An exact count does not fit the 128-bit counter.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Persisted or supplied data contradicts itself or a fresh computation.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// A derived quantity failed one of its structural checks (sign,
// divisibility, degree). Always indicates wrong upstream counts.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace sqfree

#endif  // SQFREE_ERRORS_HPP_
