// Copyright 2026 The bhscarpis Authors.
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

namespace bh {

/// A construction cannot be set up: missing C1/C2 witness, no complete
/// LSESC set for the needed order, mismatched or unverified inputs.
class PlanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructed matrix failed exact re-verification. Indicates a bug.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed matrix or Latin square file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bh
