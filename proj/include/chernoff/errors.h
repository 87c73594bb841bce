// Copyright 2026 The Chernoff Toolkit Authors
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

#ifndef CHERNOFF_ERRORS_H_
#define CHERNOFF_ERRORS_H_

#include <stdexcept>
#include <string>

namespace chernoff {

// An argument lies outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Mismatched lengths or dimensions.
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what)
      : std::invalid_argument(what) {}
};

// The request exceeds the enumeration or simulation caps.
class ResourceError : public std::length_error {
 public:
  explicit ResourceError(const std::string& what) : std::length_error(what) {}
};

// A valid request for a combination the formula does not cover.
class UnsupportedError : public std::logic_error {
 public:
  explicit UnsupportedError(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace chernoff

#endif  // CHERNOFF_ERRORS_H_
