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

#include "sharpcsp/language.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "sharpcsp/errors.h"

namespace sharpcsp {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

void ConstraintLanguage::add(std::string name, Relation relation) {
  if (!is_identifier(name)) throw NameError("invalid relation name '" + name + "'");
  if (contains(name)) throw NameError("relation '" + name + "' defined twice");
  if (is_reserved_name(name) && !(builtin(name) == relation)) {
    throw NameError("reserved relation '" + name + "' may not be redefined");
  }
  entries_.emplace_back(std::move(name), std::move(relation));
}

void ConstraintLanguage::add_builtin(std::string_view name) {
  if (contains(name)) return;
  add(std::string(name), builtin(name));
}

bool ConstraintLanguage::contains(std::string_view name) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const Entry& e) { return e.first == name; });
}

const Relation& ConstraintLanguage::at(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.first == name) return e.second;
  }
  throw NameError("unknown relation '" + std::string(name) + "'");
}

std::string ConstraintLanguage::to_text() const {
  std::ostringstream out;
  for (const auto& [name, rel] : entries_) {
    if (is_reserved_name(name)) {
      out << "use " << name << "\n";
      continue;
    }
    out << "relation " << name << " " << rel.arity() << "\n";
    for (const auto& t : rel.tuples()) out << t.to_string() << "\n";
    out << "end\n";
  }
  return out.str();
}

ConstraintLanguage ConstraintLanguage::parse(std::string_view text_in) {
  const auto lines = text::tokenize(text_in);
  ConstraintLanguage out;
  std::size_t pos = 0;
  while (pos < lines.size()) {
    if (!text::parse_language_directive(lines, pos, out)) {
      throw ParseError("unexpected directive '" + lines[pos].tokens.front() + "'", lines[pos].number);
    }
  }
  if (out.empty()) throw ParseError("constraint language is empty", 0);
  return out;
}

namespace text {

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::istringstream in{std::string(raw)};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

namespace {

int parse_int(const std::string& tok, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("expected an integer, got '" + tok + "'", line);
  }
  return value;
}

}  // namespace

void parse_relation_block(const std::vector<Line>& lines, std::size_t& pos, ConstraintLanguage& out) {
  const Line& header = lines[pos];
  if (header.tokens.size() != 3) throw ParseError("expected 'relation NAME ARITY'", header.number);
  const std::string& name = header.tokens[1];
  const int arity = parse_int(header.tokens[2], header.number);
  if (arity < 1 || arity > kMaxArity) {
    throw ParseError("arity must be in 1.." + std::to_string(kMaxArity), header.number);
  }
  std::vector<std::uint32_t> members;
  ++pos;
  for (;; ++pos) {
    if (pos >= lines.size()) throw ParseError("relation '" + name + "' is missing 'end'", header.number);
    const Line& line = lines[pos];
    if (line.tokens.size() == 1 && line.tokens[0] == "end") break;
    for (const auto& tok : line.tokens) {
      if (static_cast<int>(tok.size()) != arity) {
        throw ParseError("tuple '" + tok + "' does not have length " + std::to_string(arity), line.number);
      }
      try {
        members.push_back(BooleanTuple::parse(tok).bits());
      } catch (const ArityError& e) {
        throw ParseError(e.what(), line.number);
      }
    }
  }
  ++pos;
  try {
    out.add(name, Relation(arity, members));
  } catch (const NameError& e) {
    throw ParseError(e.what(), header.number);
  }
}

bool parse_language_directive(const std::vector<Line>& lines, std::size_t& pos, ConstraintLanguage& out) {
  const Line& line = lines[pos];
  const std::string& head = line.tokens.front();
  if (head == "relation") {
    parse_relation_block(lines, pos, out);
    return true;
  }
  if (head == "use") {
    if (line.tokens.size() < 2) throw ParseError("expected 'use NAME ...'", line.number);
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      if (!is_reserved_name(line.tokens[i])) {
        throw ParseError("'" + line.tokens[i] + "' is not a built-in relation", line.number);
      }
      out.add_builtin(line.tokens[i]);
    }
    ++pos;
    return true;
  }
  return false;
}

}  // namespace text

}  // namespace sharpcsp
