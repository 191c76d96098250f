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

#include "sharpcsp/reductions.h"

#include <algorithm>
#include <map>
#include <set>

#include "sharpcsp/relation_props.h"

namespace sharpcsp {

namespace {

std::string delta_name(int value) { return value == 0 ? "delta0" : "delta1"; }

void check_value(int value) {
  if (value != 0 && value != 1) throw PreconditionError("pin value must be 0 or 1");
}

Count power(const Count& base, std::size_t e) {
  Count out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

std::string fresh_name(std::string base, std::set<std::string>& taken) {
  while (taken.count(base)) base += "_";
  taken.insert(base);
  return base;
}

}  // namespace

std::string to_string(RecoveryStep::Op op) {
  switch (op) {
    case RecoveryStep::Op::FloorDivide:
      return "floor_divide";
    case RecoveryStep::Op::Halve:
      return "halve";
    case RecoveryStep::Op::Identity:
      return "identity";
  }
  return "?";
}

Count RecoveryRecipe::apply(const Count& transformed) const {
  Count c = transformed;
  for (const auto& s : steps) {
    switch (s.op) {
      case RecoveryStep::Op::FloorDivide:
        c /= s.scale;  // nonnegative operands: truncation is floor
        break;
      case RecoveryStep::Op::Halve:
        c /= 2;
        break;
      case RecoveryStep::Op::Identity:
        break;
    }
  }
  return c;
}

RecoveryRecipe chain(const RecoveryRecipe& outer, const RecoveryRecipe& inner) {
  RecoveryRecipe out = inner;
  out.steps.insert(out.steps.end(), outer.steps.begin(), outer.steps.end());
  return out;
}

std::size_t replication_depth(const Count& w, const Count& w2, std::size_t n) {
  if (w <= w2) throw PreconditionError("majority count must exceed minority count");
  if (w2 == 0) return 1;
  const Count target = pow2(n + 2);
  Count wm = w;
  Count w2m = w2;
  std::size_t m = 1;
  while (wm < target * w2m) {
    wm *= w;
    w2m *= w2;
    ++m;
  }
  return m;
}

PinningPlan make_pinning_plan(const Instance& instance, const std::string& relation, const Relation& table,
                              int value, std::optional<int> position) {
  check_value(value);
  std::optional<MajorityColumn> col;
  if (position) {
    if (*position < 1 || *position > table.arity()) throw PreconditionError("pinning column out of range");
    std::size_t ones = 0;
    for (auto t : table.members()) ones += BooleanTuple(table.arity(), t).at(*position - 1);
    const std::size_t major = value ? ones : table.size() - ones;
    const std::size_t minor = table.size() - major;
    if (major > minor) col = MajorityColumn{*position, value, major, minor};
  } else {
    col = majority_column(table, value);
  }
  if (!col) {
    throw PreconditionError("relation " + relation + " has no column with more " + std::to_string(value) +
                            "s than " + std::to_string(1 - value) + "s");
  }
  PinningPlan plan{relation, table, col->position, value, Count(col->w), Count(col->w2), 0,
                   instance.num_variables(), pinned_vars(instance, value).size()};
  plan.m = replication_depth(plan.w, plan.w2, plan.n);
  return plan;
}

Reduction pinning_reduce(const Instance& instance, const PinningPlan& plan) {
  check_value(plan.value);
  const std::string pin = delta_name(plan.value);
  const auto pinned = pinned_vars(instance, plan.value);
  if (plan.n != instance.num_variables() || plan.n0 != pinned.size()) {
    throw PreconditionError("pinning plan was made for a different instance");
  }
  const auto check = make_pinning_plan(instance, plan.relation, plan.table, plan.value, plan.position);
  if (check.w != plan.w || check.w2 != plan.w2 || plan.m < check.m) {
    throw PreconditionError("pinning plan counts do not match column " + std::to_string(plan.position));
  }
  if (pinned.empty()) return {instance, RecoveryRecipe::floor_divide(1)};
  if (plan.relation == pin) throw PreconditionError("cannot pin with the pinned relation itself");

  ConstraintLanguage language;
  for (const auto& [name, rel] : instance.language().entries()) {
    if (name != pin) language.add(name, rel);
  }
  if (language.contains(plan.relation)) {
    if (!(language.at(plan.relation) == plan.table)) {
      throw NameError("relation '" + plan.relation + "' means different tables in instance and plan");
    }
  } else {
    language.add(plan.relation, plan.table);
  }

  std::vector<std::string> variables = instance.variables();
  std::set<std::string> taken(variables.begin(), variables.end());
  std::vector<Constraint> constraints;
  for (const auto& c : instance.constraints()) {
    if (c.relation != pin) constraints.push_back(c);
  }
  const int k = plan.table.arity();
  for (const auto& x : instance.variables()) {
    if (!pinned.count(x)) continue;
    for (std::size_t a = 1; a <= plan.m; ++a) {
      Constraint c{plan.relation, {}};
      for (int b = 1; b <= k; ++b) {
        if (b == plan.position) {
          c.scope.push_back(x);
        } else {
          const std::string v = fresh_name(x + "'" + std::to_string(a) + "." + std::to_string(b), taken);
          variables.push_back(v);
          c.scope.push_back(v);
        }
      }
      constraints.push_back(std::move(c));
    }
  }
  const Count scale = power(plan.w, plan.m * plan.n0);
  return {Instance(std::move(language), std::move(variables), std::move(constraints)),
          RecoveryRecipe::floor_divide(scale)};
}

Reduction merge_reduce(const Instance& instance, int value) {
  check_value(value);
  const std::string pin = delta_name(value);
  for (const auto& [name, rel] : instance.language().entries()) {
    if (name != pin && !is_complement_closed(rel)) {
      throw PreconditionError("merge needs a complement-closed language; " + name + " is not");
    }
  }
  const auto pinned = pinned_vars(instance, value);
  std::set<std::string> taken(instance.variables().begin(), instance.variables().end());
  const std::string z = fresh_name(value == 0 ? "z0" : "z1", taken);

  ConstraintLanguage language;
  for (const auto& [name, rel] : instance.language().entries()) {
    if (name != pin) language.add(name, rel);
  }
  std::vector<std::string> variables;
  for (const auto& v : instance.variables()) {
    if (!pinned.count(v)) variables.push_back(v);
  }
  variables.push_back(z);
  std::vector<Constraint> constraints;
  for (const auto& c : instance.constraints()) {
    if (c.relation == pin) continue;
    Constraint out = c;
    for (auto& v : out.scope) {
      if (pinned.count(v)) v = z;
    }
    constraints.push_back(std::move(out));
  }
  return {Instance(std::move(language), std::move(variables), std::move(constraints)), RecoveryRecipe::halve()};
}

Reduction unify_pins(const Instance& instance, int value) {
  check_value(value);
  const std::string pin = delta_name(value);
  const auto pinned = pinned_vars(instance, value);
  if (pinned.size() <= 1) {
    // still drop duplicate delta constraints
    std::vector<Constraint> constraints;
    bool seen = false;
    for (const auto& c : instance.constraints()) {
      if (c.relation == pin) {
        if (seen) continue;
        seen = true;
      }
      constraints.push_back(c);
    }
    return {Instance(instance.language(), instance.variables(), std::move(constraints)), RecoveryRecipe::identity()};
  }
  std::string rep;
  for (const auto& v : instance.variables()) {
    if (pinned.count(v)) {
      rep = v;
      break;
    }
  }
  std::vector<std::string> variables;
  for (const auto& v : instance.variables()) {
    if (v == rep || !pinned.count(v)) variables.push_back(v);
  }
  std::vector<Constraint> constraints;
  bool seen = false;
  for (const auto& c : instance.constraints()) {
    if (c.relation == pin) {
      if (seen) continue;
      seen = true;
    }
    Constraint out = c;
    for (auto& v : out.scope) {
      if (pinned.count(v)) v = rep;
    }
    constraints.push_back(std::move(out));
  }
  return {Instance(instance.language(), std::move(variables), std::move(constraints)), RecoveryRecipe::identity()};
}

Reduction inline_gadget_reduce(const Instance& instance, const Gadget& g, std::string_view target,
                               std::string_view prefix) {
  if (!instance.language().contains(target)) return {instance, RecoveryRecipe::identity()};
  if (!(instance.language().at(target) == g.claimed)) {
    throw PreconditionError("gadget claims " + g.claimed.to_string() + " but " + std::string(target) + " is " +
                            instance.language().at(target).to_string());
  }
  if (!verify_implementation(g)) {
    throw PreconditionError("gadget does not implement " + std::string(target));
  }
  return {inline_gadget(instance, target, g, prefix), RecoveryRecipe::identity()};
}

Instance prune_language(const Instance& instance) {
  ConstraintLanguage language;
  const auto used = instance.used_relations();
  for (const auto& [name, rel] : instance.language().entries()) {
    if (std::find(used.begin(), used.end(), name) != used.end()) language.add(name, rel);
  }
  return Instance(std::move(language), instance.variables(), instance.constraints());
}

namespace {

Instance encode_graph(const Graph& g, const std::string& rel) {
  validate(g);
  ConstraintLanguage language;
  language.add_builtin(rel);
  std::vector<std::string> variables;
  for (int v = 1; v <= g.n; ++v) variables.push_back("v" + std::to_string(v));
  std::vector<Constraint> constraints;
  for (const auto& [u, v] : g.edges) constraints.push_back({rel, {variables[u - 1], variables[v - 1]}});
  return Instance(std::move(language), std::move(variables), std::move(constraints));
}

}  // namespace

Instance encode_is_nand(const Graph& g) { return encode_graph(g, "NAND"); }

Instance encode_is_or(const Graph& g) { return encode_graph(g, "OR"); }

Instance encode_bis(const BipartiteGraph& g) {
  validate(g);
  ConstraintLanguage language;
  language.add_builtin("IMPLIES");
  std::vector<std::string> variables;
  for (int i = 1; i <= g.left; ++i) variables.push_back("L" + std::to_string(i));
  for (int j = 1; j <= g.right; ++j) variables.push_back("R" + std::to_string(j));
  std::vector<Constraint> constraints;
  for (const auto& [i, j] : g.edges) constraints.push_back({"IMPLIES", {"L" + std::to_string(i), "R" + std::to_string(j)}});
  return Instance(std::move(language), std::move(variables), std::move(constraints));
}

Instance atomize(const Instance& instance) {
  ConstraintLanguage language;
  std::vector<Constraint> constraints;
  auto emit = [&](const std::string& rel, std::vector<std::string> scope) {
    language.add_builtin(rel);
    constraints.push_back({rel, std::move(scope)});
  };
  for (const auto& c : instance.constraints()) {
    const Relation& r = instance.relation_of(c);
    if (c.relation == "delta0" || c.relation == "delta1" || c.relation == "IMPLIES") {
      emit(c.relation, c.scope);
      continue;
    }
    if (!is_in_im2(r)) throw PreconditionError("relation " + c.relation + " is not in IM2");
    if (r.empty()) {
      emit("delta0", {c.scope.front()});
      emit("delta1", {c.scope.front()});
      continue;
    }
    for (const auto& atom : im2_formula(r).atoms) {
      switch (atom.kind) {
        case Im2Atom::Kind::Zero:
          emit("delta0", {c.scope[atom.i - 1]});
          break;
        case Im2Atom::Kind::One:
          emit("delta1", {c.scope[atom.i - 1]});
          break;
        case Im2Atom::Kind::Implies:
          emit("IMPLIES", {c.scope[atom.i - 1], c.scope[atom.j - 1]});
          break;
      }
    }
  }
  return Instance(std::move(language), instance.variables(), std::move(constraints));
}

}  // namespace sharpcsp
