// Copyright 2026 The sharpcsp Authors
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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sharpcsp/language.h"
#include "sharpcsp/relation_props.h"

namespace sharpcsp {

/// The three complexity classes of Boolean #CSP(Gamma).
enum class Verdict {
  ExactPolyTime,  // every relation affine
  BisEquivalent,  // not all affine, all in IM2
  SatEquivalent,  // some relation non-affine and some relation outside IM2
};

/// "FP", "BIS" or "SAT".
std::string to_string(Verdict v);

struct RelationReport {
  std::string name;
  bool affine;
  bool im2;
};

struct Classification {
  Verdict verdict;
  std::vector<RelationReport> per_relation;

  /// The first non-affine relation and its witness (BIS and SAT verdicts).
  std::optional<std::string> affine_relation;
  std::optional<AffineWitness> affine_evidence;

  /// The first relation outside IM2 and its witness (SAT verdict).
  std::optional<std::string> im2_relation;
  std::optional<Im2Witness> im2_evidence;
};

/// Throws PreconditionError on an empty language.
Classification classify(const ConstraintLanguage& language);

}  // namespace sharpcsp
