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

#include "sharpcsp/instance.h"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace sharpcsp {

bool is_variable_name(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_' || u == '.' || u == '\'' || u == '-' || u == '[' || u == ']';
  });
}

Instance::Instance(ConstraintLanguage language, std::vector<std::string> variables, std::vector<Constraint> constraints)
    : language_(std::move(language)), variables_(std::move(variables)), constraints_(std::move(constraints)) {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (!is_variable_name(variables_[i])) throw NameError("invalid variable name '" + variables_[i] + "'");
    if (!index_.emplace(variables_[i], i).second) {
      throw NameError("variable '" + variables_[i] + "' declared twice");
    }
  }
  for (const auto& c : constraints_) {
    const Relation& r = language_.at(c.relation);
    if (static_cast<int>(c.scope.size()) != r.arity()) {
      throw ArityError("constraint " + c.relation + " has " + std::to_string(c.scope.size()) +
                       " arguments, relation arity is " + std::to_string(r.arity()));
    }
    for (const auto& v : c.scope) {
      if (!has_variable(v)) throw NameError("undeclared variable '" + v + "' in constraint " + c.relation);
    }
  }
}

bool Instance::has_variable(std::string_view name) const { return index_.count(std::string(name)) != 0; }

std::size_t Instance::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw NameError("unknown variable '" + std::string(name) + "'");
  return it->second;
}

std::vector<std::string> Instance::used_relations() const {
  std::vector<std::string> out;
  for (const auto& c : constraints_) {
    if (std::find(out.begin(), out.end(), c.relation) == out.end()) out.push_back(c.relation);
  }
  return out;
}

std::string Instance::to_text() const {
  std::ostringstream out;
  out << language_.to_text();
  for (std::size_t i = 0; i < variables_.size(); i += 16) {
    out << "vars";
    for (std::size_t j = i; j < std::min(variables_.size(), i + 16); ++j) out << ' ' << variables_[j];
    out << "\n";
  }
  for (const auto& c : constraints_) {
    out << "constraint " << c.relation;
    for (const auto& v : c.scope) out << ' ' << v;
    out << "\n";
  }
  return out.str();
}

Instance Instance::parse(std::string_view text_in, const LanguageLoader& loader) {
  using Kind = InstanceParseError::Kind;
  const auto lines = text::tokenize(text_in);
  ConstraintLanguage language;
  std::vector<std::string> variables;
  std::vector<Constraint> constraints;
  std::vector<int> constraint_lines;

  std::size_t pos = 0;
  while (pos < lines.size()) {
    const auto& line = lines[pos];
    const std::string& head = line.tokens.front();
    if (text::parse_language_directive(lines, pos, language)) continue;
    if (head == "language") {
      if (line.tokens.size() != 2) throw InstanceParseError(Kind::Syntax, "expected 'language <path>'", line.number);
      if (!loader) throw InstanceParseError(Kind::Syntax, "no loader for 'language' directive", line.number);
      const auto sub = text::tokenize(loader(line.tokens[1]));
      std::size_t sub_pos = 0;
      while (sub_pos < sub.size()) {
        if (!text::parse_language_directive(sub, sub_pos, language)) {
          throw InstanceParseError(Kind::Syntax,
                                   line.tokens[1] + ":" + std::to_string(sub[sub_pos].number) +
                                       ": unexpected directive '" + sub[sub_pos].tokens.front() + "'",
                                   line.number);
        }
      }
    } else if (head == "vars") {
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        const auto& v = line.tokens[i];
        if (!is_variable_name(v)) throw InstanceParseError(Kind::Syntax, "invalid variable name '" + v + "'", line.number);
        if (std::find(variables.begin(), variables.end(), v) != variables.end()) {
          throw InstanceParseError(Kind::Syntax, "variable '" + v + "' declared twice", line.number);
        }
        variables.push_back(v);
      }
    } else if (head == "constraint") {
      if (line.tokens.size() < 2) throw InstanceParseError(Kind::Syntax, "expected 'constraint REL v1 ... vk'", line.number);
      Constraint c{line.tokens[1], {line.tokens.begin() + 2, line.tokens.end()}};
      constraints.push_back(std::move(c));
      constraint_lines.push_back(line.number);
    } else {
      throw InstanceParseError(Kind::Syntax, "unexpected directive '" + head + "'", line.number);
    }
    ++pos;
  }

  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const auto& c = constraints[i];
    const int ln = constraint_lines[i];
    if (!language.contains(c.relation)) {
      if (!is_reserved_name(c.relation)) {
        throw InstanceParseError(Kind::UnknownRelation, "unknown relation '" + c.relation + "'", ln);
      }
      language.add_builtin(c.relation);
    }
    const int arity = language.at(c.relation).arity();
    if (static_cast<int>(c.scope.size()) != arity) {
      throw InstanceParseError(Kind::ArityMismatch,
                               "relation " + c.relation + " has arity " + std::to_string(arity) + " but " +
                                   std::to_string(c.scope.size()) + " arguments were given",
                               ln);
    }
    for (const auto& v : c.scope) {
      if (std::find(variables.begin(), variables.end(), v) == variables.end()) {
        throw InstanceParseError(Kind::UnknownVariable, "undeclared variable '" + v + "'", ln);
      }
    }
  }
  return Instance(std::move(language), std::move(variables), std::move(constraints));
}

bool satisfies(const Instance& instance, const Assignment& sigma) {
  for (const auto& v : instance.variables()) {
    if (!sigma.count(v)) throw PreconditionError("assignment does not cover variable '" + v + "'");
  }
  for (const auto& c : instance.constraints()) {
    const Relation& r = instance.relation_of(c);
    std::uint32_t idx = 0;
    for (const auto& v : c.scope) idx = (idx << 1) | static_cast<std::uint32_t>(sigma.at(v));
    if (!r.contains(idx)) return false;
  }
  return true;
}

std::set<std::string> pinned_vars(const Instance& instance, int value) {
  const std::string_view pin = value == 0 ? "delta0" : "delta1";
  std::set<std::string> out;
  for (const auto& c : instance.constraints()) {
    if (c.relation == pin) out.insert(c.scope.front());
  }
  return out;
}

bool is_atomic(const Instance& instance) {
  return std::all_of(instance.constraints().begin(), instance.constraints().end(), [](const Constraint& c) {
    return c.relation == "delta0" || c.relation == "delta1" || c.relation == "IMPLIES";
  });
}

std::vector<std::vector<bool>> implies_closure(const Instance& instance) {
  const std::size_t n = instance.num_variables();
  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& c : instance.constraints()) {
    if (c.relation != "IMPLIES") continue;
    succ[instance.index_of(c.scope[0])].push_back(instance.index_of(c.scope[1]));
  }
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<std::size_t> queue{s};
    reach[s][s] = true;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : succ[u]) {
        if (!reach[s][v]) {
          reach[s][v] = true;
          queue.push_back(v);
        }
      }
    }
  }
  return reach;
}

ForcedVars forced_vars(const Instance& instance) {
  if (!is_atomic(instance)) {
    throw PreconditionError("forced_vars requires constraints over delta0, delta1 and IMPLIES only");
  }
  const auto reach = implies_closure(instance);
  const auto& vars = instance.variables();
  ForcedVars out;
  for (const auto& c : instance.constraints()) {
    const std::size_t j = instance.index_of(c.scope.front());
    if (c.relation == "delta0") {
      // v_i is forced to 0 when IMPLIES*(v_i, v_j) and delta0(v_j)
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (reach[i][j]) out.zero.insert(vars[i]);
      }
    } else if (c.relation == "delta1") {
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (reach[j][i]) out.one.insert(vars[i]);
      }
    }
  }
  return out;
}

}  // namespace sharpcsp
