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

#include "clash/learner.hpp"

#include "clash/errors.hpp"

namespace clash {

LearnerKind parse_learner_kind(std::string_view name) {
  if (name == "mode1") return LearnerKind::kMode1;
  if (name == "mode2") return LearnerKind::kMode2;
  if (name == "perceptron") return LearnerKind::kPerceptron;
  if (name == "knn1") return LearnerKind::kKnn1;
  throw ContractViolation("unknown learner: " + std::string(name));
}

std::string to_string(LearnerKind kind) {
  switch (kind) {
    case LearnerKind::kMode1: return "mode1";
    case LearnerKind::kMode2: return "mode2";
    case LearnerKind::kPerceptron: return "perceptron";
    case LearnerKind::kKnn1: return "knn1";
  }
  return "mode1";
}

}  // namespace clash
