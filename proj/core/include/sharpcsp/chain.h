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

#include "sharpcsp/brute_force.h"
#include "sharpcsp/classifier.h"
#include "sharpcsp/graph.h"
#include "sharpcsp/pinning.h"
#include "sharpcsp/reductions.h"

namespace sharpcsp {

struct ChainStep {
  std::string label;
  Instance instance;  // after this step
  RecoveryRecipe recipe;  // maps this step's count to the previous step's
  std::optional<Count> count;  // brute-force count (verify mode)
  bool identity_ok = true;
};

struct HardnessChain {
  Classification classification;
  PinningStrategy strategy;
  int pin = 0;  // the constant the derived gadgets rely on
  std::vector<std::string> notes;  // gadget derivations
  std::vector<ChainStep> steps;  // steps.front() is the encoded source
  RecoveryRecipe recipe;  // final instance count -> source count
  Count source_count;  // independent count of the source graph
  std::optional<Count> recovered;

  const Instance& final_instance() const { return steps.back().instance; }
  bool pass() const { return recovered && *recovered == source_count; }
};

struct ChainOptions {
  bool verify = true;
  std::size_t cap = kDefaultBruteCap;
};

/// Reduces #IS on a graph (SAT-equivalent language) or #BIS on a bipartite
/// graph (BIS-equivalent language) to #CSP(gamma). With verify, every step is
/// brute-force counted and its recipe checked; a failing step throws
/// InternalError naming it.
HardnessChain compile_hardness_chain(const ConstraintLanguage& gamma, const GraphInput& source,
                                     const ChainOptions& options = {});

}  // namespace sharpcsp
