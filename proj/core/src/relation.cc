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

#include "sharpcsp/relation.h"

#include <algorithm>
#include <array>
#include <map>

#include "sharpcsp/errors.h"

namespace sharpcsp {

namespace {

void check_arity(int arity) {
  if (arity < 1 || arity > kMaxArity) {
    throw ArityError("arity " + std::to_string(arity) + " outside 1.." + std::to_string(kMaxArity));
  }
}

}  // namespace

BooleanTuple::BooleanTuple(int arity, std::uint32_t bits) : arity_(arity), bits_(bits) {
  check_arity(arity);
  if (bits >> arity) {
    throw ArityError("tuple bits do not fit arity " + std::to_string(arity));
  }
}

BooleanTuple BooleanTuple::parse(std::string_view bitstring) {
  if (bitstring.empty() || bitstring.size() > kMaxArity) {
    throw ArityError("bitstring length must be in 1.." + std::to_string(kMaxArity));
  }
  std::uint32_t bits = 0;
  for (char c : bitstring) {
    if (c != '0' && c != '1') {
      throw ArityError("bitstring may contain only 0 and 1: '" + std::string(bitstring) + "'");
    }
    bits = (bits << 1) | static_cast<std::uint32_t>(c == '1');
  }
  return BooleanTuple(static_cast<int>(bitstring.size()), bits);
}

BooleanTuple BooleanTuple::complement() const noexcept {
  BooleanTuple out = *this;
  out.bits_ = ~bits_ & ((1u << arity_) - 1u);
  return out;
}

std::string BooleanTuple::to_string() const {
  std::string s(static_cast<std::size_t>(arity_), '0');
  for (int i = 0; i < arity_; ++i) {
    if (at(i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

BooleanTuple tuple_op(TupleOp op, std::span<const BooleanTuple> tuples) {
  const std::size_t expected = op == TupleOp::Xor3 ? 3 : 2;
  if (tuples.size() != expected) {
    throw ArityError("tuple operation expects " + std::to_string(expected) + " tuples");
  }
  const int arity = tuples[0].arity();
  for (const auto& t : tuples) {
    if (t.arity() != arity) throw ArityError("tuple arities differ");
  }
  std::uint32_t bits = tuples[0].bits();
  for (std::size_t i = 1; i < tuples.size(); ++i) {
    switch (op) {
      case TupleOp::Xor3:
      case TupleOp::Xor2: bits ^= tuples[i].bits(); break;
      case TupleOp::And: bits &= tuples[i].bits(); break;
      case TupleOp::Or: bits |= tuples[i].bits(); break;
    }
  }
  return BooleanTuple(arity, bits);
}

BooleanTuple tuple_op(TupleOp op, std::initializer_list<BooleanTuple> tuples) {
  return tuple_op(op, std::span<const BooleanTuple>(tuples.begin(), tuples.size()));
}

Relation::Relation(int arity) : arity_(arity) {
  check_arity(arity);
  table_.assign(std::size_t{1} << arity, false);
}

Relation::Relation(int arity, std::span<const std::uint32_t> members) : Relation(arity) {
  for (std::uint32_t m : members) {
    if (m >= table_.size()) {
      throw ArityError("tuple index " + std::to_string(m) + " does not fit arity " + std::to_string(arity));
    }
    table_[m] = true;
  }
  for (std::uint32_t i = 0; i < table_.size(); ++i) {
    if (table_[i]) members_.push_back(i);
  }
}

Relation Relation::from_tuples(int arity, std::span<const BooleanTuple> tuples) {
  std::vector<std::uint32_t> idx;
  idx.reserve(tuples.size());
  for (const auto& t : tuples) {
    if (t.arity() != arity) throw ArityError("tuple " + t.to_string() + " has the wrong arity");
    idx.push_back(t.bits());
  }
  return Relation(arity, idx);
}

Relation Relation::of(std::initializer_list<std::string_view> bitstrings) {
  if (bitstrings.size() == 0) throw ArityError("Relation::of needs at least one tuple");
  std::vector<BooleanTuple> tuples;
  for (auto s : bitstrings) tuples.push_back(BooleanTuple::parse(s));
  return from_tuples(tuples.front().arity(), tuples);
}

bool Relation::contains(const BooleanTuple& t) const {
  if (t.arity() != arity_) throw ArityError("tuple arity differs from relation arity");
  return table_[t.bits()];
}

std::vector<BooleanTuple> Relation::tuples() const {
  std::vector<BooleanTuple> out;
  out.reserve(members_.size());
  for (auto m : members_) out.emplace_back(arity_, m);
  return out;
}

Relation Relation::complement() const {
  const std::uint32_t mask = (1u << arity_) - 1u;
  std::vector<std::uint32_t> idx;
  for (auto m : members_) idx.push_back(~m & mask);
  return Relation(arity_, idx);
}

Relation Relation::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != arity_) throw ArityError("permutation length differs from arity");
  std::vector<std::uint32_t> idx;
  for (std::uint32_t t = 0; t < table_.size(); ++t) {
    // tuple t of the result is in R' iff (t_{perm[0]}, ...) is in R
    std::uint32_t src = 0;
    for (int i = 0; i < arity_; ++i) {
      src = (src << 1) | ((t >> (arity_ - 1 - perm[static_cast<std::size_t>(i)])) & 1u);
    }
    if (table_[src]) idx.push_back(t);
  }
  return Relation(arity_, idx);
}

std::string Relation::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ',';
    s += BooleanTuple(arity_, members_[i]).to_string();
  }
  return s + "}";
}

namespace {

constexpr std::array<std::string_view, 6> kReserved = {"delta0", "delta1", "OR", "NAND", "IMPLIES", "XOR"};

const std::map<std::string_view, Relation>& builtin_table() {
  static const std::map<std::string_view, Relation> table = {
      {"delta0", Relation::of({"0"})},
      {"delta1", Relation::of({"1"})},
      {"OR", Relation::of({"01", "10", "11"})},
      {"NAND", Relation::of({"00", "01", "10"})},
      {"IMPLIES", Relation::of({"00", "01", "11"})},
      {"XOR", Relation::of({"01", "10"})},
  };
  return table;
}

}  // namespace

bool is_reserved_name(std::string_view name) {
  return std::find(kReserved.begin(), kReserved.end(), name) != kReserved.end();
}

std::span<const std::string_view> reserved_names() { return kReserved; }

const Relation& builtin(std::string_view name) {
  const auto& table = builtin_table();
  auto it = table.find(name);
  if (it == table.end()) throw NameError("unknown built-in relation '" + std::string(name) + "'");
  return it->second;
}

}  // namespace sharpcsp
