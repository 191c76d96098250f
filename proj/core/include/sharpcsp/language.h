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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sharpcsp/relation.h"

namespace sharpcsp {

/// A finite, named set of relations, kept in insertion order.
///
/// Reserved names (see is_reserved_name) may only carry their built-in table.
class ConstraintLanguage {
 public:
  using Entry = std::pair<std::string, Relation>;

  ConstraintLanguage() = default;

  /// Adds a relation. Throws NameError on a duplicate name, an invalid
  /// identifier, or a reserved name bound to a non-built-in table.
  void add(std::string name, Relation relation);

  /// Adds the built-in table under its reserved name (no-op if present).
  void add_builtin(std::string_view name);

  bool contains(std::string_view name) const;
  /// Throws NameError when absent.
  const Relation& at(std::string_view name) const;

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Relation blocks for user relations and `use NAME` lines for built-ins.
  std::string to_text() const;

  /// Parses the block format:
  ///
  ///   relation NAME ARITY
  ///   0110        # one bitstring per tuple, x1 first
  ///   end
  ///   use IMPLIES # include a built-in
  static ConstraintLanguage parse(std::string_view text);

 private:
  std::vector<Entry> entries_;
};

bool is_identifier(std::string_view s);

namespace text {

/// A non-blank line with its comment stripped and split on whitespace.
struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text);

/// Parses `relation NAME ARITY ... end` starting at lines[pos]; leaves pos
/// after the `end` line.
void parse_relation_block(const std::vector<Line>& lines, std::size_t& pos, ConstraintLanguage& out);

/// Handles `relation` blocks and `use` lines; returns false for any other
/// directive without consuming it.
bool parse_language_directive(const std::vector<Line>& lines, std::size_t& pos, ConstraintLanguage& out);

}  // namespace text

}  // namespace sharpcsp
