// Copyright 2026 The gfcode Authors
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

#ifndef GFCODE_ERRORS_HPP_
#define GFCODE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gfcode {

// Argument outside an operation's domain: std::domain_error.

/// The request is well-formed but exceeds a configured size or work limit.
class capability_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter the constructions do not cover (e.g. non-prime p).
class unsupported_parameter : public capability_error {
 public:
  using capability_error::capability_error;
};

}  // namespace gfcode

#endif  // GFCODE_ERRORS_HPP_
