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

#include "sharpcsp/gadget.h"

#include <algorithm>
#include <set>
#include <sstream>

namespace sharpcsp {

std::vector<std::string> Gadget::auxiliaries() const {
  std::vector<std::string> out;
  for (const auto& v : body.variables()) {
    if (std::find(distinguished.begin(), distinguished.end(), v) == distinguished.end()) out.push_back(v);
  }
  return out;
}

std::string Gadget::to_text() const {
  std::ostringstream out;
  out << "gadget " << distinguished.size();
  for (const auto& d : distinguished) out << ' ' << d;
  out << " claims " << claimed_name << "\n";
  for (const auto& line : trace) out << "# " << line << "\n";
  if (!is_reserved_name(claimed_name) && !body.language().contains(claimed_name)) {
    ConstraintLanguage claim;
    claim.add(claimed_name, claimed);
    out << claim.to_text();
  }
  out << body.to_text();
  return out.str();
}

Gadget Gadget::parse(std::string_view text_in, const LanguageLoader& loader) {
  const auto lines = text::tokenize(text_in);
  if (lines.empty() || lines.front().tokens.front() != "gadget") {
    throw ParseError("expected a 'gadget k x1 .. xk claims REL' header", lines.empty() ? 0 : lines.front().number);
  }
  const auto& header = lines.front().tokens;
  const int line_no = lines.front().number;
  if (header.size() < 4 || header[header.size() - 2] != "claims") {
    throw ParseError("expected 'gadget k x1 .. xk claims REL'", line_no);
  }
  const std::size_t k = header.size() - 4;
  if (header[1] != std::to_string(k)) {
    throw ParseError("gadget header declares " + header[1] + " distinguished variables but lists " + std::to_string(k),
                     line_no);
  }
  std::vector<std::string> distinguished(header.begin() + 2, header.begin() + 2 + static_cast<std::ptrdiff_t>(k));
  const std::string claimed_name = header.back();

  // Body is everything after the header line.
  std::size_t offset = 0;
  for (int n = 1; n < line_no + 1; ++n) {
    offset = text_in.find('\n', offset);
    if (offset == std::string_view::npos) break;
    ++offset;
  }
  const std::string_view rest = offset == std::string_view::npos ? std::string_view{} : text_in.substr(offset);
  Instance body = Instance::parse(rest, loader);

  Relation claimed = is_reserved_name(claimed_name) ? builtin(claimed_name) : Relation(1);
  if (!is_reserved_name(claimed_name)) {
    if (!body.language().contains(claimed_name)) {
      throw ParseError("claimed relation '" + claimed_name + "' is not defined", line_no);
    }
    claimed = body.language().at(claimed_name);
  }
  if (claimed.arity() != static_cast<int>(k)) {
    throw ParseError("claimed relation arity differs from the distinguished variable count", line_no);
  }
  for (const auto& d : distinguished) {
    if (!body.has_variable(d)) throw ParseError("distinguished variable '" + d + "' is not declared", line_no);
  }
  std::vector<std::string> trace;
  return Gadget{std::move(body), std::move(distinguished), claimed_name, std::move(claimed), std::move(trace)};
}

std::vector<std::uint8_t> extension_counts(const Gadget& g, std::size_t cap) {
  const std::size_t n = g.body.num_variables();
  if (n > cap || n > 63) {
    throw ResourceError("gadget verification over " + std::to_string(n) + " variables exceeds the cap of " +
                        std::to_string(cap));
  }
  std::vector<std::size_t> pos;
  for (const auto& d : g.distinguished) pos.push_back(g.body.index_of(d));
  const CompiledInstance compiled(g.body);
  std::vector<std::uint8_t> counts(std::size_t{1} << g.distinguished.size(), 0);
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    if (!compiled.satisfied_by(a)) continue;
    std::uint32_t t = 0;
    for (auto p : pos) t = (t << 1) | static_cast<std::uint32_t>((a >> p) & 1u);
    if (counts[t] < 2) ++counts[t];
  }
  return counts;
}

Relation implemented_relation(const Gadget& g, std::size_t cap) {
  const auto counts = extension_counts(g, cap);
  std::vector<std::uint32_t> members;
  for (std::uint32_t t = 0; t < counts.size(); ++t) {
    if (counts[t]) members.push_back(t);
  }
  return Relation(static_cast<int>(g.distinguished.size()), members);
}

bool verify_implementation(const Gadget& g, std::size_t cap) {
  if (g.distinguished.empty() || static_cast<int>(g.distinguished.size()) != g.claimed.arity()) return false;
  const std::set<std::string> unique(g.distinguished.begin(), g.distinguished.end());
  if (unique.size() != g.distinguished.size()) return false;
  for (const auto& d : g.distinguished) {
    if (!g.body.has_variable(d)) return false;
  }
  const auto counts = extension_counts(g, cap);
  for (std::uint32_t t = 0; t < counts.size(); ++t) {
    if (counts[t] != (g.claimed.contains(t) ? 1 : 0)) return false;
  }
  return true;
}

Instance inline_gadget(const Instance& host, std::string_view target, const Gadget& g, std::string_view prefix) {
  ConstraintLanguage language;
  for (const auto& [name, rel] : host.language().entries()) {
    if (name != target) language.add(name, rel);
  }
  for (const auto& c : g.body.constraints()) {
    const Relation& r = g.body.relation_of(c);
    if (c.relation == target) throw PreconditionError("gadget for " + std::string(target) + " uses " + c.relation);
    if (language.contains(c.relation)) {
      if (!(language.at(c.relation) == r)) {
        throw NameError("relation '" + c.relation + "' means different tables in host and gadget");
      }
    } else {
      language.add(c.relation, r);
    }
  }

  std::vector<std::string> variables = host.variables();
  std::set<std::string> taken(variables.begin(), variables.end());
  std::vector<Constraint> constraints;
  const auto aux = g.auxiliaries();
  std::size_t copy = 0;
  for (const auto& c : host.constraints()) {
    if (c.relation != target) {
      constraints.push_back(c);
      continue;
    }
    ++copy;
    std::map<std::string, std::string> rename;
    for (std::size_t i = 0; i < g.distinguished.size(); ++i) rename[g.distinguished[i]] = c.scope[i];
    for (const auto& a : aux) {
      std::string fresh = std::string(prefix) + std::to_string(copy) + "." + a;
      while (taken.count(fresh)) fresh += "_";
      taken.insert(fresh);
      variables.push_back(fresh);
      rename[a] = fresh;
    }
    for (const auto& gc : g.body.constraints()) {
      Constraint out{gc.relation, {}};
      for (const auto& v : gc.scope) out.scope.push_back(rename.at(v));
      constraints.push_back(std::move(out));
    }
  }
  return Instance(std::move(language), std::move(variables), std::move(constraints));
}

void GadgetBuilder::relation(const std::string& name, const Relation& r) {
  if (!language_.contains(name)) language_.add(name, r);
}

void GadgetBuilder::variable(const std::string& name) {
  if (std::find(variables_.begin(), variables_.end(), name) == variables_.end()) variables_.push_back(name);
}

void GadgetBuilder::constrain(const std::string& relation, std::vector<std::string> scope) {
  if (!language_.contains(relation)) language_.add_builtin(relation);
  for (const auto& v : scope) variable(v);
  constraints_.push_back({relation, std::move(scope)});
}

Gadget GadgetBuilder::finish(std::vector<std::string> distinguished, std::string claimed_name, Relation claimed,
                             std::vector<std::string> trace) const {
  ConstraintLanguage used;
  for (const auto& c : constraints_) {
    if (!used.contains(c.relation)) used.add(c.relation, language_.at(c.relation));
  }
  // distinguished variables first, then auxiliaries in order of appearance
  std::vector<std::string> vars = distinguished;
  for (const auto& v : variables_) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  }
  return Gadget{Instance(std::move(used), std::move(vars), constraints_), std::move(distinguished),
                std::move(claimed_name), std::move(claimed), std::move(trace)};
}

}  // namespace sharpcsp
