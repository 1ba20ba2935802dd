// Copyright 2026 The Clash Authors
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

namespace clash {

/// A caller broke an operation's precondition (wrong dimension, bad parameter).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// IDF was requested for a bucket no absorbed document has touched, or from an
/// empty sketch. log(n / 0) is never silently returned as infinity.
class UntouchedBucketError : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

/// A word outside the closed oracle vocabulary was vectorized.
class UnknownWordError : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

/// Pearson correlation is undefined because one sample has zero variance.
class DegenerateSampleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or incompatible persisted state (model snapshot, config).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace clash
