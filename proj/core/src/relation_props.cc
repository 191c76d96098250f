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

#include "sharpcsp/relation_props.h"


#include "sharpcsp/errors.h"

namespace sharpcsp {

namespace {

std::uint32_t all_ones(int arity) { return (1u << arity) - 1u; }

}  // namespace

bool is_0_valid(const Relation& r) { return r.contains(0u); }

bool is_1_valid(const Relation& r) { return r.contains(all_ones(r.arity())); }

bool is_complement_closed(const Relation& r) {
  const std::uint32_t mask = all_ones(r.arity());
  for (auto t : r.members()) {
    if (!r.contains(~t & mask)) return false;
  }
  return true;
}

bool is_affine(const Relation& r) {
  if (r.empty()) return true;
  // R is affine iff a ^ R is a linear subspace for some (any) a in R. Since
  // |a ^ R| = |R|, that holds iff its span has exactly |R| elements.
  const std::uint32_t a = r.members().front();
  std::uint32_t basis[kMaxArity] = {};
  int rank = 0;
  for (auto b : r.members()) {
    std::uint32_t v = a ^ b;
    for (int bit = kMaxArity - 1; bit >= 0 && v; --bit) {
      if (!((v >> bit) & 1u)) continue;
      if (!basis[bit]) {
        basis[bit] = v;
        ++rank;
        v = 0;
      } else {
        v ^= basis[bit];
      }
    }
  }
  return r.size() == (std::size_t{1} << rank);
}

AffineWitness non_affine_witness(const Relation& r) {
  const int k = r.arity();
  for (auto a : r.members()) {
    for (auto b : r.members()) {
      for (auto c : r.members()) {
        const std::uint32_t d = a ^ b ^ c;
        if (!r.contains(d)) {
          return {BooleanTuple(k, a), BooleanTuple(k, b), BooleanTuple(k, c), BooleanTuple(k, d)};
        }
      }
    }
  }
  throw NoWitnessError("relation " + r.to_string() + " is affine");
}

AffineWitness non_affine_pair(const Relation& r) {
  const int k = r.arity();
  for (auto a : r.members()) {
    for (auto b : r.members()) {
      if (!r.contains(a ^ b)) {
        return {BooleanTuple(k, a), BooleanTuple(k, b), std::nullopt, BooleanTuple(k, a ^ b)};
      }
    }
  }
  throw NoWitnessError("relation " + r.to_string() + " is affine");
}

AnchoredPair non_affine_from_anchor(const Relation& r, const BooleanTuple& anchor) {
  if (!r.contains(anchor)) {
    throw PreconditionError("anchor " + anchor.to_string() + " is not in " + r.to_string());
  }
  const int k = r.arity();
  const std::uint32_t a = anchor.bits();
  for (auto b : r.members()) {
    for (auto c : r.members()) {
      if (!r.contains(a ^ b ^ c)) return {BooleanTuple(k, b), BooleanTuple(k, c)};
    }
  }
  throw NoWitnessError("relation " + r.to_string() + " is affine");
}

std::string to_string(BinaryOp op) { return op == BinaryOp::And ? "AND" : "OR"; }

std::optional<Im2Witness> find_closure_violation(const Relation& r, BinaryOp op) {
  const int k = r.arity();
  for (auto t : r.members()) {
    for (auto t2 : r.members()) {
      const std::uint32_t res = op == BinaryOp::And ? (t & t2) : (t | t2);
      if (!r.contains(res)) {
        return Im2Witness{BooleanTuple(k, t), BooleanTuple(k, t2), op, BooleanTuple(k, res)};
      }
    }
  }
  return std::nullopt;
}

bool is_in_im2(const Relation& r) {
  return !find_closure_violation(r, BinaryOp::And) && !find_closure_violation(r, BinaryOp::Or);
}

Im2Witness im2_witness(const Relation& r) {
  if (auto w = find_closure_violation(r, BinaryOp::And)) return *w;
  if (auto w = find_closure_violation(r, BinaryOp::Or)) return *w;
  throw NoWitnessError("relation " + r.to_string() + " is in IM2");
}

std::string Im2Atom::to_string() const {
  switch (kind) {
    case Kind::Zero: return "Zero(" + std::to_string(i) + ")";
    case Kind::One: return "One(" + std::to_string(i) + ")";
    case Kind::Implies: return "Implies(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return {};
}

Relation Im2Formula::evaluate() const {
  std::vector<std::uint32_t> idx;
  for (std::uint32_t t = 0; t < (1u << arity); ++t) {
    const BooleanTuple tuple(arity, t);
    bool ok = true;
    for (const auto& atom : atoms) {
      const bool xi = tuple.at(atom.i - 1);
      switch (atom.kind) {
        case Im2Atom::Kind::Zero: ok = !xi; break;
        case Im2Atom::Kind::One: ok = xi; break;
        case Im2Atom::Kind::Implies: ok = !xi || tuple.at(atom.j - 1); break;
      }
      if (!ok) break;
    }
    if (ok) idx.push_back(t);
  }
  return Relation(arity, idx);
}

Im2Formula entailed_atoms(const Relation& r) {
  const int k = r.arity();
  // columns[i] has bit m set iff the m-th member has x_{i+1} = 1
  std::vector<std::vector<bool>> columns(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (auto t : r.members()) columns[static_cast<std::size_t>(i)].push_back(BooleanTuple(k, t).at(i));
  }
  auto constant = [&](int i, bool value) {
    for (bool b : columns[static_cast<std::size_t>(i)]) {
      if (b != value) return false;
    }
    return true;
  };
  Im2Formula f{k, {}};
  for (int i = 0; i < k; ++i) {
    if (constant(i, false)) f.atoms.push_back({Im2Atom::Kind::Zero, i + 1});
  }
  for (int i = 0; i < k; ++i) {
    if (constant(i, true)) f.atoms.push_back({Im2Atom::Kind::One, i + 1});
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      const auto& ci = columns[static_cast<std::size_t>(i)];
      const auto& cj = columns[static_cast<std::size_t>(j)];
      bool leq = true;
      for (std::size_t m = 0; m < ci.size() && leq; ++m) leq = !ci[m] || cj[m];
      if (leq) f.atoms.push_back({Im2Atom::Kind::Implies, i + 1, j + 1});
    }
  }
  return f;
}

Im2Formula im2_formula(const Relation& r) {
  if (r.empty()) throw PreconditionError("im2_formula: the empty relation has no IM2 formula");
  if (!is_in_im2(r)) throw PreconditionError("im2_formula: relation " + r.to_string() + " is not in IM2");
  Im2Formula f = entailed_atoms(r);
  if (!(f.evaluate() == r)) {
    throw InternalError("im2_formula: atoms do not reconstruct " + r.to_string());
  }
  return f;
}

std::optional<MajorityColumn> majority_column(const Relation& r) {
  const int k = r.arity();
  for (int i = 0; i < k; ++i) {
    std::size_t ones = 0;
    for (auto t : r.members()) ones += BooleanTuple(k, t).at(i);
    const std::size_t zeros = r.size() - ones;
    if (zeros > ones) return MajorityColumn{i + 1, 0, zeros, ones};
    if (ones > zeros) return MajorityColumn{i + 1, 1, ones, zeros};
  }
  return std::nullopt;
}

std::optional<MajorityColumn> majority_column(const Relation& r, int direction) {
  const int k = r.arity();
  for (int i = 0; i < k; ++i) {
    std::size_t ones = 0;
    for (auto t : r.members()) ones += BooleanTuple(k, t).at(i);
    const std::size_t zeros = r.size() - ones;
    if (direction == 0 && zeros > ones) return MajorityColumn{i + 1, 0, zeros, ones};
    if (direction == 1 && ones > zeros) return MajorityColumn{i + 1, 1, ones, zeros};
  }
  return std::nullopt;
}

}  // namespace sharpcsp
