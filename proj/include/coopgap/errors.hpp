// Copyright 2026 The coopgap Authors
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

#ifndef COOPGAP_ERRORS_HPP_
#define COOPGAP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace coopgap {

// Malformed input, violated precondition, or an unsupported request.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The incomplete game has no extension in the requested class.
class NotExtendableError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two independent computations of the same quantity disagreed.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Enumeration refused: effective dimension above the configured cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace coopgap

#endif  // COOPGAP_ERRORS_HPP_
