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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sharpcsp/gadget.h"
#include "sharpcsp/language.h"
#include "sharpcsp/reductions.h"

namespace sharpcsp {

/// How one of delta0 / delta1 is simulated over a language.
struct PinMethod {
  enum class Kind {
    Native,  // delta<v> is itself in the language
    Majority,  // replication on a majority column of a relation of the language
    GadgetMajority,  // replication on a majority column of a gadget-implemented relation
    Gadget,  // a gadget implements delta<v> directly
    Merge,  // complement-closed language: identify pinned variables
  };
  Kind kind;
  std::string relation;  // Majority / GadgetMajority: relation replicated
  Relation table{1};
  int position = 0;  // 1-based column for the replication
  std::optional<Gadget> gadget;
  std::string note;
};

std::string to_string(PinMethod::Kind k);

struct PinningStrategy {
  std::string branch;
  std::array<std::optional<PinMethod>, 2> pins;  // indexed by pinned value

  bool available(int value) const { return pins.at(value).has_value(); }
};

/// Which pins the language can simulate, following the case split on the
/// first non-complement-closed relation (or merging when there is none).
PinningStrategy choose_pinning(const ConstraintLanguage& gamma);

struct ReductionStep {
  std::string label;
  Reduction result;
};

/// Removes every delta<value> constraint from `instance` using `method`.
/// Pinned variables are first identified with each other (count-preserving),
/// so replication runs with a single pinned variable.
std::vector<ReductionStep> eliminate_pin(const Instance& instance, int value, const PinMethod& method);

}  // namespace sharpcsp
