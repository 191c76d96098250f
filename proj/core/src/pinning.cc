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

#include "sharpcsp/pinning.h"

#include <algorithm>

#include "sharpcsp/gadget_library.h"
#include "sharpcsp/relation_props.h"

namespace sharpcsp {

namespace {

std::string delta_name(int value) { return value == 0 ? "delta0" : "delta1"; }

PinMethod majority_on(const std::string& name, const Relation& r, const MajorityColumn& col, std::string note) {
  PinMethod m{PinMethod::Kind::Majority, name, r, col.position, std::nullopt, std::move(note)};
  return m;
}

PinMethod via_gadget(Gadget g, std::string note) {
  PinMethod m{PinMethod::Kind::Gadget, g.claimed_name, g.claimed, 0, std::move(g), std::move(note)};
  return m;
}

bool body_uses(const Gadget& g, const std::string& relation) {
  const auto used = g.body.used_relations();
  return std::find(used.begin(), used.end(), relation) != used.end();
}

}  // namespace

std::string to_string(PinMethod::Kind k) {
  switch (k) {
    case PinMethod::Kind::Native:
      return "native";
    case PinMethod::Kind::Majority:
      return "majority";
    case PinMethod::Kind::GadgetMajority:
      return "gadget-majority";
    case PinMethod::Kind::Gadget:
      return "gadget";
    case PinMethod::Kind::Merge:
      return "merge";
  }
  return "?";
}

PinningStrategy choose_pinning(const ConstraintLanguage& gamma) {
  if (gamma.empty()) throw PreconditionError("empty constraint language");
  PinningStrategy s;

  const ConstraintLanguage::Entry* nc = nullptr;
  for (const auto& e : gamma.entries()) {
    if (!is_complement_closed(e.second)) {
      nc = &e;
      break;
    }
  }
  if (!nc) {
    s.branch = "complement-closed: merge pinned variables";
    for (int v : {0, 1}) {
      s.pins[v] = PinMethod{PinMethod::Kind::Merge, "", Relation(1), 0, std::nullopt,
                            "identify all " + delta_name(v) + " variables with one fresh variable"};
    }
  } else {
    const auto& [name, r] = *nc;
    const bool v0 = is_0_valid(r);
    const bool v1 = is_1_valid(r);
    if (!v0 && !v1) {
      s.branch = name + " is neither 0-valid nor 1-valid";
      auto gs = from_non_complement_closed(name, r);
      s.pins[1] = via_gadget(gs[0], "delta1 from " + name);
      s.pins[0] = via_gadget(gs[1], "delta0 from " + name);
    } else if (v0 && v1) {
      s.branch = name + " is 0-valid and 1-valid, not complement-closed";
      std::optional<Gadget> implies;
      for (int v : {0, 1}) {
        if (auto col = majority_column(r, v)) {
          s.pins[v] = majority_on(name, r, *col,
                                  "column " + std::to_string(col->position) + " of " + name + " has majority " +
                                      std::to_string(v));
          continue;
        }
        if (!implies) implies = from_non_complement_closed(name, r).front();
        const int position = v == 0 ? 1 : 2;
        s.pins[v] = PinMethod{PinMethod::Kind::GadgetMajority, implies->claimed_name, implies->claimed, position,
                              implies, "column " + std::to_string(position) + " of IMPLIES implemented by " + name};
      }
    } else {
      s.branch = name + (v0 ? " is 0-valid only" : " is 1-valid only");
      const int v = v0 ? 0 : 1;
      s.pins[v] = via_gadget(pin_from_validity(name, r), delta_name(v) + " as " + name + "(x,...,x)");
    }
  }

  // A unary constant already in the language wins.
  for (int v : {0, 1}) {
    const std::string dn = delta_name(v);
    for (const auto& [name, r] : gamma.entries()) {
      if (!(r == builtin(dn))) continue;
      if (name == dn) {
        s.pins[v] = PinMethod{PinMethod::Kind::Native, dn, r, 0, std::nullopt, dn + " is in the language"};
      } else {
        GadgetBuilder b;
        b.relation(name, r);
        b.constrain(name, {"x"});
        s.pins[v] = via_gadget(b.finish({"x"}, dn, builtin(dn), {name + " equals " + dn}), name + " equals " + dn);
      }
      break;
    }
  }
  return s;
}

std::vector<ReductionStep> eliminate_pin(const Instance& instance, int value, const PinMethod& method) {
  const std::string dn = delta_name(value);
  std::vector<ReductionStep> steps;
  if (method.kind == PinMethod::Kind::Native || pinned_vars(instance, value).empty()) return steps;

  Instance cur = instance;
  auto push = [&](std::string label, Reduction r) {
    r.instance = prune_language(r.instance);
    cur = r.instance;
    steps.push_back({std::move(label), std::move(r)});
  };
  if (pinned_vars(cur, value).size() > 1) push("identify " + dn + " variables", unify_pins(cur, value));

  switch (method.kind) {
    case PinMethod::Kind::Native:
      break;
    case PinMethod::Kind::Majority:
    case PinMethod::Kind::GadgetMajority: {
      const auto plan = make_pinning_plan(cur, method.relation, method.table, value, method.position);
      push("pin " + dn + " by " + std::to_string(plan.m) + " copies of " + method.relation + " (column " +
               std::to_string(plan.position) + ", w=" + to_string(plan.w) + ", w2=" + to_string(plan.w2) + ")",
           pinning_reduce(cur, plan));
      if (method.kind == PinMethod::Kind::GadgetMajority && !body_uses(*method.gadget, method.relation)) {
        push("inline gadget for " + method.relation, inline_gadget_reduce(cur, *method.gadget, method.relation, "p"));
      }
      break;
    }
    case PinMethod::Kind::Gadget:
      push("inline gadget for " + dn, inline_gadget_reduce(cur, *method.gadget, dn, value == 0 ? "c" : "d"));
      break;
    case PinMethod::Kind::Merge:
      push("merge " + dn + " variables", merge_reduce(cur, value));
      break;
  }
  return steps;
}

}  // namespace sharpcsp
