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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sharpcsp/brute_force.h"
#include "sharpcsp/instance.h"

namespace sharpcsp {

/// A CSP instance with k distinguished variables that claims to implement a
/// k-ary relation: every claimed tuple has exactly one satisfying extension
/// to the auxiliary variables, every other tuple has none.
struct Gadget {
  Instance body;
  std::vector<std::string> distinguished;
  std::string claimed_name;
  Relation claimed;
  /// Derivation steps (branch taken, witnesses used).
  std::vector<std::string> trace;

  std::size_t target_arity() const noexcept { return distinguished.size(); }
  std::vector<std::string> auxiliaries() const;

  /// "gadget k x1 .. xk claims REL", trace comments, then the body in the
  /// instance grammar.
  std::string to_text() const;
  static Gadget parse(std::string_view text, const LanguageLoader& loader = nullptr);
};

/// Satisfying-extension count of each distinguished tuple, saturated at 2.
/// Throws ResourceError past the cap.
std::vector<std::uint8_t> extension_counts(const Gadget& g, std::size_t cap = kDefaultBruteCap);

/// Distinguished tuples with at least one satisfying extension.
Relation implemented_relation(const Gadget& g, std::size_t cap = kDefaultBruteCap);

/// Exact check of the faithful-and-perfect condition against g.claimed.
bool verify_implementation(const Gadget& g, std::size_t cap = kDefaultBruteCap);

/// Replaces every `target` constraint of `host` by a fresh copy of g's
/// constraints: distinguished variables bound to the scope, auxiliaries
/// renamed "<prefix><copy>.<name>". Relations used by g are merged into the
/// host language and `target` is dropped from it.
Instance inline_gadget(const Instance& host, std::string_view target, const Gadget& g, std::string_view prefix);

/// Assembles gadget bodies incrementally.
class GadgetBuilder {
 public:
  void relation(const std::string& name, const Relation& r);
  void variable(const std::string& name);
  /// Declares any missing scope variables; reserved relation names resolve to
  /// built-ins.
  void constrain(const std::string& relation, std::vector<std::string> scope);

  Gadget finish(std::vector<std::string> distinguished, std::string claimed_name, Relation claimed,
                std::vector<std::string> trace) const;

 private:
  ConstraintLanguage language_;
  std::vector<std::string> variables_;
  std::vector<Constraint> constraints_;
};

}  // namespace sharpcsp
