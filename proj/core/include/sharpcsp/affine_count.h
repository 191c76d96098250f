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

#include "sharpcsp/brute_force.h"
#include "sharpcsp/gf2.h"
#include "sharpcsp/instance.h"

namespace sharpcsp {

/// Rows of relation_to_system for each constraint, re-indexed onto the
/// instance's variables. A repeated scope variable folds its coefficients by
/// XOR. Throws PreconditionError if a used relation is not affine.
Gf2System instance_to_system(const Instance& instance);

/// True when every relation used by a constraint is affine.
bool uses_only_affine(const Instance& instance);

enum class CountMethod { Affine, BruteForce };

struct CountResult {
  Count value;
  CountMethod method;
};

/// Gaussian elimination when every used relation is affine, otherwise
/// brute force under `options.cap`.
CountResult count(const Instance& instance, const BruteForceOptions& options = {});

}  // namespace sharpcsp
