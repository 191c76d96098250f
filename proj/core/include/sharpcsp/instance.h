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

#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sharpcsp/errors.h"
#include "sharpcsp/language.h"

namespace sharpcsp {

struct Constraint {
  std::string relation;
  std::vector<std::string> scope;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Finer classification of instance-grammar errors. All are ParseErrors.
class InstanceParseError : public ParseError {
 public:
  enum class Kind { Syntax, ArityMismatch, UnknownRelation, UnknownVariable };

  InstanceParseError(Kind kind, const std::string& message, int line) : ParseError(message, line), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Resolves the path of a `language` directive to file contents.
using LanguageLoader = std::function<std::string(const std::string& path)>;

bool is_variable_name(std::string_view s);

/// A #CSP instance: variables plus constraints over a constraint language.
///
/// Scopes may repeat a variable. Variables that occur in no constraint still
/// count (each doubles the number of satisfying assignments).
class Instance {
 public:
  /// Validates that every constraint names a relation of `language`, has a
  /// scope of matching length and only uses declared variables. Throws
  /// NameError or ArityError.
  Instance(ConstraintLanguage language, std::vector<std::string> variables, std::vector<Constraint> constraints);

  const ConstraintLanguage& language() const noexcept { return language_; }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
  std::size_t num_variables() const noexcept { return variables_.size(); }

  bool has_variable(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;
  const Relation& relation_of(const Constraint& c) const { return language_.at(c.relation); }

  /// Relation names referenced by constraints, in order of first use.
  std::vector<std::string> used_relations() const;

  /// Serializes in the instance grammar (language blocks inlined).
  std::string to_text() const;

  /// Instance grammar:
  ///
  ///   language <path>             # optional, resolved through `loader`
  ///   relation NAME K ... end     # optional inline relation blocks
  ///   vars <name> <name> ...      # one or more lines
  ///   constraint <REL> <v1> ... <vk>
  ///
  /// Built-in relations are always available.
  static Instance parse(std::string_view text, const LanguageLoader& loader = nullptr);

 private:
  ConstraintLanguage language_;
  std::vector<std::string> variables_;
  std::vector<Constraint> constraints_;
  std::unordered_map<std::string, std::size_t> index_;
};

using Assignment = std::map<std::string, bool>;

/// Throws PreconditionError if `sigma` misses a variable of `instance`.
bool satisfies(const Instance& instance, const Assignment& sigma);

/// Variables carrying a delta0 (value 0) or delta1 (value 1) constraint.
/// No propagation.
std::set<std::string> pinned_vars(const Instance& instance, int value);

struct ForcedVars {
  std::set<std::string> zero;
  std::set<std::string> one;
};

/// Variables forced to 0 / 1 through chains of IMPLIES constraints. Requires
/// every constraint to be delta0, delta1 or IMPLIES (PreconditionError).
ForcedVars forced_vars(const Instance& instance);

/// Reflexive-transitive closure of the IMPLIES digraph: reach[i][j] iff
/// IMPLIES*(v_i, v_j).
std::vector<std::vector<bool>> implies_closure(const Instance& instance);

/// True when every constraint uses delta0, delta1 or IMPLIES.
bool is_atomic(const Instance& instance);

}  // namespace sharpcsp
