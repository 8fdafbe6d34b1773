// Copyright 2026 The iag Authors
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

#ifndef IAG_ERRORS_HPP_
#define IAG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace iag {

// Bad user input: malformed formula text, invalid prior, index out of range.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what)
      : std::invalid_argument(what) {}
};

// A configurable resource cap was exceeded (solver state space,
// sequence enumeration).  Distinct from ValidationError so the CLI can
// map it to its own exit code.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what)
      : std::runtime_error(what) {}
};

// An internal invariant failed.  Seeing this is a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace iag

#endif  // IAG_ERRORS_HPP_
