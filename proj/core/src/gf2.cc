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

#include "sharpcsp/gf2.h"

#include <sstream>

#include "sharpcsp/errors.h"
#include "sharpcsp/relation_props.h"

namespace sharpcsp {

std::string Gf2System::to_string() const {
  std::ostringstream out;
  for (const auto& row : rows) {
    bool first = true;
    for (std::size_t i = 0; i < num_vars; ++i) {
      if (!row.coeffs[i]) continue;
      out << (first ? "" : "+") << "x" << i + 1;
      first = false;
    }
    if (first) out << "0";
    out << "=" << row.rhs << "\n";
  }
  return out.str();
}

Gf2Echelon eliminate(const Gf2System& system) {
  std::vector<Gf2System::Row> rows = system.rows;
  Gf2Echelon out;
  std::size_t next = 0;
  for (std::size_t col = 0; col < system.num_vars && next < rows.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < rows.size() && !rows[pivot].coeffs[col]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[next]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].coeffs[col]) {
        rows[r].coeffs ^= rows[next].coeffs;
        rows[r].rhs ^= rows[next].rhs;
      }
    }
    ++next;
  }
  out.rank = next;
  for (std::size_t r = next; r < rows.size(); ++r) {
    if (rows[r].rhs) out.consistent = false;
  }
  return out;
}

Count count_solutions(const Gf2System& system) {
  const auto e = eliminate(system);
  if (!e.consistent) return 0;
  return pow2(system.num_vars - e.rank);
}

Relation solution_relation(const Gf2System& system) {
  const int k = static_cast<int>(system.num_vars);
  if (k < 1 || k > kMaxArity) throw ArityError("solution_relation needs 1.." + std::to_string(kMaxArity) + " variables");
  std::vector<std::uint32_t> members;
  for (std::uint32_t t = 0; t < (1u << k); ++t) {
    const BooleanTuple tuple(k, t);
    bool ok = true;
    for (const auto& row : system.rows) {
      bool parity = false;
      for (int i = 0; i < k; ++i) parity ^= row.coeffs[static_cast<std::size_t>(i)] && tuple.at(i);
      if (parity != row.rhs) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(t);
  }
  return Relation(k, members);
}

Gf2System relation_to_system(const Relation& r) {
  if (!is_affine(r)) throw PreconditionError("relation " + r.to_string() + " is not affine");
  const int k = r.arity();
  const auto width = static_cast<std::size_t>(k);
  Gf2System sys{width, {}};
  if (r.empty()) {
    sys.rows.push_back({boost::dynamic_bitset<>(width), true});
    return sys;
  }

  // Row-reduced basis of V = {a ^ b : b in R}, over positions 0..k-1.
  const BooleanTuple a(k, r.members().front());
  std::vector<boost::dynamic_bitset<>> basis;
  std::vector<std::size_t> pivots;
  for (auto m : r.members()) {
    const BooleanTuple b(k, m);
    boost::dynamic_bitset<> v(width);
    for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = a.at(i) != b.at(i);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (v[pivots[j]]) v ^= basis[j];
    }
    if (v.none()) continue;
    const std::size_t p = v.find_first();
    for (auto& row : basis) {
      if (row[p]) row ^= v;
    }
    basis.push_back(v);
    pivots.push_back(p);
  }

  // One orthogonal-complement vector per free position.
  std::vector<bool> is_pivot(width, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < width; ++f) {
    if (is_pivot[f]) continue;
    boost::dynamic_bitset<> c(width);
    c[f] = true;
    for (std::size_t j = 0; j < basis.size(); ++j) c[pivots[j]] = basis[j][f];
    bool rhs = false;
    for (int i = 0; i < k; ++i) rhs ^= c[static_cast<std::size_t>(i)] && a.at(i);
    sys.rows.push_back({c, rhs});
  }

  if (!(solution_relation(sys) == r)) {
    throw InternalError("relation_to_system: system does not reproduce " + r.to_string());
  }
  return sys;
}

}  // namespace sharpcsp
