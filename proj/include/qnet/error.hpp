// Copyright qnet authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qnet {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected input: dimension mismatch, out-of-range index, malformed value.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Requested object exceeds a configured dimension or step cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Networks that cannot be combined, lifted or inverted as requested.
class CompositionError : public Error {
 public:
  using Error::Error;
};

/// Zero-norm branch or state where a normalized result was requested.
class DegenerateState : public Error {
 public:
  using Error::Error;
};

}  // namespace qnet
