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

#include <optional>
#include <string>
#include <vector>

#include "sharpcsp/relation.h"

namespace sharpcsp {

bool is_0_valid(const Relation& r);
bool is_1_valid(const Relation& r);
bool is_complement_closed(const Relation& r);

/// Closed under componentwise a^b^c. The empty relation counts as affine.
bool is_affine(const Relation& r);

/// a, b, c in R with d = a^b^c outside R, or (pair form) a, b in R with
/// d = a^b outside R. `c` is unset for the pair form.
struct AffineWitness {
  BooleanTuple a;
  BooleanTuple b;
  std::optional<BooleanTuple> c;
  BooleanTuple d;

  bool is_pair() const noexcept { return !c.has_value(); }
};

/// Lexicographically smallest triple. Throws NoWitnessError if R is affine.
AffineWitness non_affine_witness(const Relation& r);
/// Lexicographically smallest pair. Throws NoWitnessError if R is affine.
AffineWitness non_affine_pair(const Relation& r);

struct AnchoredPair {
  BooleanTuple b;
  BooleanTuple c;
};
/// For a fixed anchor a in R, the smallest (b, c) in R with a^b^c outside R.
AnchoredPair non_affine_from_anchor(const Relation& r, const BooleanTuple& anchor);

enum class BinaryOp { And, Or };
std::string to_string(BinaryOp op);

/// Closed under componentwise AND and OR of member pairs.
bool is_in_im2(const Relation& r);

struct Im2Witness {
  BooleanTuple t;
  BooleanTuple t2;
  BinaryOp op;
  BooleanTuple result;
};

/// Smallest violating pair; AND violations are searched before OR violations.
/// Throws NoWitnessError if R is in IM2.
Im2Witness im2_witness(const Relation& r);

/// Smallest pair (t, t2) in R with `t op t2` outside R, if any.
std::optional<Im2Witness> find_closure_violation(const Relation& r, BinaryOp op);

/// One conjunct of an IM2 formula. Positions are 1-based.
struct Im2Atom {
  enum class Kind { Zero, One, Implies };
  Kind kind;
  int i;
  int j = 0;  // Implies only

  friend bool operator==(const Im2Atom&, const Im2Atom&) = default;
  std::string to_string() const;
};

struct Im2Formula {
  int arity;
  std::vector<Im2Atom> atoms;

  /// The solution set of the conjunction.
  Relation evaluate() const;
};

/// Every Zero/One/Implies atom entailed by R, checked to reconstruct R exactly.
/// Throws PreconditionError for empty or non-IM2 relations, InternalError if the
/// reconstruction disagrees.
Im2Formula im2_formula(const Relation& r);

/// Conjunction of every entailed atom, without the membership precondition.
/// im2_formula is this plus the checks.
Im2Formula entailed_atoms(const Relation& r);

struct MajorityColumn {
  int position;  // 1-based
  int direction;  // majority value, 0 or 1
  std::size_t w;  // majority count
  std::size_t w2;  // minority count
};

/// Smallest unbalanced column, if any.
std::optional<MajorityColumn> majority_column(const Relation& r);

/// Smallest column whose majority value is `direction`, if any.
std::optional<MajorityColumn> majority_column(const Relation& r, int direction);

}  // namespace sharpcsp
