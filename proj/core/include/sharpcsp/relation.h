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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sharpcsp {

inline constexpr int kMaxArity = 16;

/// A Boolean tuple (x1, ..., xk). x1 is the most significant bit of `bits`,
/// so the natural order on `bits` is the lexicographic order on tuples.
class BooleanTuple {
 public:
  BooleanTuple(int arity, std::uint32_t bits);

  /// Parses a bitstring such as "011" (x1 first).
  static BooleanTuple parse(std::string_view bitstring);

  int arity() const noexcept { return arity_; }
  std::uint32_t bits() const noexcept { return bits_; }

  /// Value at 0-based index i (i = 0 is x1).
  bool at(int i) const noexcept { return (bits_ >> (arity_ - 1 - i)) & 1u; }

  BooleanTuple complement() const noexcept;
  std::string to_string() const;

  friend bool operator==(const BooleanTuple&, const BooleanTuple&) = default;
  friend auto operator<=>(const BooleanTuple&, const BooleanTuple&) = default;

 private:
  int arity_;
  std::uint32_t bits_;
};

enum class TupleOp { Xor3, Xor2, And, Or };

/// Componentwise application of `op`. Xor3 takes three tuples, the rest two.
BooleanTuple tuple_op(TupleOp op, std::span<const BooleanTuple> tuples);
BooleanTuple tuple_op(TupleOp op, std::initializer_list<BooleanTuple> tuples);

/// A k-ary Boolean relation stored as a truth table over the 2^k tuples.
/// Immutable once built.
class Relation {
 public:
  /// The empty relation of the given arity.
  explicit Relation(int arity);

  /// Builds from tuple indices; duplicates are ignored.
  Relation(int arity, std::span<const std::uint32_t> members);

  static Relation from_tuples(int arity, std::span<const BooleanTuple> tuples);
  /// Convenience: `Relation::of({"01", "10"})`. Arity is taken from the strings.
  static Relation of(std::initializer_list<std::string_view> bitstrings);

  int arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  bool contains(std::uint32_t index) const noexcept { return index < table_.size() && table_[index]; }
  bool contains(const BooleanTuple& t) const;

  /// Member indices in increasing (lexicographic) order.
  std::span<const std::uint32_t> members() const noexcept { return members_; }
  std::vector<BooleanTuple> tuples() const;

  /// {complement(t) : t in R}.
  Relation complement() const;

  /// The relation R'(x_1..x_k) = R(x_perm[0], ..., x_perm[k-1]); perm is a
  /// 0-based permutation of positions.
  Relation permuted(std::span<const int> perm) const;

  /// "{01,10}".
  std::string to_string() const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.arity_ == b.arity_ && a.table_ == b.table_;
  }

 private:
  int arity_;
  std::vector<bool> table_;
  std::vector<std::uint32_t> members_;
};

/// Names that always denote the built-in tables below.
bool is_reserved_name(std::string_view name);
std::span<const std::string_view> reserved_names();

/// delta0, delta1, OR, NAND, IMPLIES or XOR. Throws NameError otherwise.
const Relation& builtin(std::string_view name);

}  // namespace sharpcsp
