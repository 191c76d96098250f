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

#include "sharpcsp/affine_count.h"

#include <map>

#include "sharpcsp/relation_props.h"

namespace sharpcsp {

bool uses_only_affine(const Instance& instance) {
  for (const auto& name : instance.used_relations()) {
    if (!is_affine(instance.language().at(name))) return false;
  }
  return true;
}

Gf2System instance_to_system(const Instance& instance) {
  Gf2System sys{instance.num_variables(), {}};
  std::map<std::string, Gf2System> local;
  for (const auto& c : instance.constraints()) {
    auto it = local.find(c.relation);
    if (it == local.end()) {
      const Relation& r = instance.relation_of(c);
      if (!is_affine(r)) throw PreconditionError("relation " + c.relation + " is not affine");
      it = local.emplace(c.relation, relation_to_system(r)).first;
    }
    for (const auto& row : it->second.rows) {
      Gf2System::Row out{boost::dynamic_bitset<>(sys.num_vars), row.rhs};
      for (std::size_t i = 0; i < c.scope.size(); ++i) {
        if (row.coeffs[i]) out.coeffs.flip(instance.index_of(c.scope[i]));
      }
      sys.rows.push_back(std::move(out));
    }
  }
  return sys;
}

CountResult count(const Instance& instance, const BruteForceOptions& options) {
  if (uses_only_affine(instance)) return {count_solutions(instance_to_system(instance)), CountMethod::Affine};
  return {brute_force_count(instance, options), CountMethod::BruteForce};
}

}  // namespace sharpcsp
