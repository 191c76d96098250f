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
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "sharpcsp/count.h"
#include "sharpcsp/relation.h"

namespace sharpcsp {

/// A linear system over GF(2). Bit i of a row's coefficients belongs to
/// variable i.
struct Gf2System {
  struct Row {
    boost::dynamic_bitset<> coeffs;
    bool rhs = false;
  };

  std::size_t num_vars = 0;
  std::vector<Row> rows;

  /// "x1+x2=1" style, one row per line; variables named x1..xn.
  std::string to_string() const;
};

/// Rank of the coefficient matrix and whether the system is consistent.
struct Gf2Echelon {
  std::size_t rank = 0;
  bool consistent = true;
};

Gf2Echelon eliminate(const Gf2System& system);

/// 0 when inconsistent, else 2^(num_vars - rank).
Count count_solutions(const Gf2System& system);

/// For systems with at most 16 variables: the solution set as a relation with
/// variable i at position i + 1.
Relation solution_relation(const Gf2System& system);

/// A system whose solution set is exactly R. Empty R gives the single row
/// 0 = 1. Throws PreconditionError if R is not affine.
Gf2System relation_to_system(const Relation& r);

}  // namespace sharpcsp
