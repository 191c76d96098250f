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
#include <string_view>
#include <vector>

#include "sharpcsp/count.h"
#include "sharpcsp/gadget.h"
#include "sharpcsp/graph.h"
#include "sharpcsp/instance.h"

namespace sharpcsp {

struct RecoveryStep {
  enum class Op { FloorDivide, Halve, Identity };
  Op op;
  Count scale = 1;  // FloorDivide only
};

std::string to_string(RecoveryStep::Op op);

/// Steps are applied in order to the count of the transformed instance.
struct RecoveryRecipe {
  std::vector<RecoveryStep> steps;

  Count apply(const Count& transformed) const;

  static RecoveryRecipe identity() { return {{{RecoveryStep::Op::Identity}}}; }
  static RecoveryRecipe floor_divide(Count scale) { return {{{RecoveryStep::Op::FloorDivide, std::move(scale)}}}; }
  static RecoveryRecipe halve() { return {{{RecoveryStep::Op::Halve}}}; }
};

/// Recipe for a source reduced first by `outer`, whose output is then
/// reduced by `inner`: inner's steps run first.
RecoveryRecipe chain(const RecoveryRecipe& outer, const RecoveryRecipe& inner);

struct Reduction {
  Instance instance;
  RecoveryRecipe recipe;
};

struct PinningPlan {
  std::string relation;
  Relation table;
  int position;  // 1-based column
  int value;  // pinned constant, equal to the column's majority value
  Count w;
  Count w2;
  std::size_t m;
  std::size_t n;  // variables of the source instance
  std::size_t n0;  // pinned variables of the source instance
};

/// Smallest m with w^m >= 2^(n+2) * w2^m; 1 when w2 = 0.
std::size_t replication_depth(const Count& w, const Count& w2, std::size_t n);

/// Plan for eliminating delta<value> from `instance` using column
/// `position` of `table` (smallest column with majority `value` if absent).
PinningPlan make_pinning_plan(const Instance& instance, const std::string& relation, const Relation& table,
                              int value, std::optional<int> position = std::nullopt);

/// Replaces each pinned variable's delta constraints by m copies of the
/// relation with the variable at the majority column and fresh variables
/// elsewhere. Recipe: FloorDivide(w^(m*n0)).
Reduction pinning_reduce(const Instance& instance, const PinningPlan& plan);

/// Complement-closed case: every delta<value> variable becomes one fresh
/// variable and the delta constraints go. Recipe: Halve.
Reduction merge_reduce(const Instance& instance, int value = 0);

/// Identifies all delta<value> variables with the first of them and keeps a
/// single delta constraint. Count-preserving.
Reduction unify_pins(const Instance& instance, int value);

/// Replaces every `target` constraint by a fresh copy of the gadget body.
/// Count-preserving for a verified gadget.
Reduction inline_gadget_reduce(const Instance& instance, const Gadget& g, std::string_view target,
                               std::string_view prefix = "g");

/// Drops language entries no constraint uses.
Instance prune_language(const Instance& instance);

Instance encode_is_nand(const Graph& g);
Instance encode_is_or(const Graph& g);
Instance encode_bis(const BipartiteGraph& g);

/// Rewrites each constraint over an IM2 relation as delta0 / delta1 /
/// IMPLIES atoms. An empty relation becomes delta0(v) and delta1(v).
Instance atomize(const Instance& instance);

}  // namespace sharpcsp
