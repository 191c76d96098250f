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
#include "sharpcsp/count.h"
#include "sharpcsp/instance.h"

namespace sharpcsp {

struct Poset {
  /// Element labels; a collapsed class of variables is joined with '='.
  std::vector<std::string> elements;
  /// leq[a][b] iff a <= b.
  std::vector<std::vector<bool>> leq;

  /// Throws InternalError unless leq is reflexive, antisymmetric and transitive.
  void validate() const;
  std::string to_text() const;
};

/// nullopt when some variable is forced to both 0 and 1 (count 0). A downset
/// of the poset is the set of variables assigned 0.
std::optional<Poset> im2_to_downsets(const Instance& instance);

Count count_downsets(const Poset& p, std::size_t cap = kDefaultBruteCap);

}  // namespace sharpcsp
