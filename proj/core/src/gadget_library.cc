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

#include "sharpcsp/gadget_library.h"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

namespace sharpcsp {

namespace {

// Relation name standing for a ternary relation that is itself implemented by
// a gadget, until that gadget is inlined.
constexpr const char* kTernary = "__ternary";

void ensure_verified(const Gadget& g, const std::string& who) {
  if (!verify_implementation(g)) {
    throw InternalError(who + ": constructed gadget does not implement " + g.claimed_name + " " +
                        g.claimed.to_string());
  }
}

using Roles = std::vector<std::string>;

/// Role of each position, keyed by the column pattern of the witness tuples
/// (first tuple is the most significant bit).
Roles assign_roles(const std::vector<BooleanTuple>& witnesses, const std::map<unsigned, std::string>& table) {
  const int k = witnesses.front().arity();
  Roles roles;
  for (int i = 0; i < k; ++i) {
    unsigned pattern = 0;
    for (const auto& w : witnesses) pattern = (pattern << 1) | static_cast<unsigned>(w.at(i));
    auto it = table.find(pattern);
    if (it == table.end()) throw InternalError("unexpected witness column pattern at position " + std::to_string(i + 1));
    roles.push_back(it->second);
  }
  return roles;
}

bool has(const Roles& roles, const std::string& role) {
  return std::find(roles.begin(), roles.end(), role) != roles.end();
}

std::string render(const std::string& name, const Roles& roles) {
  std::string s = name + "(";
  for (std::size_t i = 0; i < roles.size(); ++i) s += (i ? "," : "") + roles[i];
  return s + ")";
}

Gadget compose(const Gadget& outer, const std::string& placeholder, const Gadget& inner, const std::string& prefix) {
  Instance body = inline_gadget(outer.body, placeholder, inner, prefix);
  return Gadget{std::move(body), outer.distinguished, outer.claimed_name, outer.claimed, outer.trace};
}

bool uses(const Gadget& g, const std::string& relation) {
  const auto used = g.body.used_relations();
  return std::find(used.begin(), used.end(), relation) != used.end();
}

/// Builder output claiming a built-in binary or unary target.
Gadget claim(const GadgetBuilder& b, std::vector<std::string> distinguished, const std::string& target) {
  return b.finish(std::move(distinguished), target, builtin(target), {});
}

/// Re-expresses a claimed binary table as a built-in, swapping the
/// distinguished variables if needed.
void canonicalize_claim(Gadget& g) {
  static constexpr std::array<const char*, 6> kNames = {"OR", "NAND", "IMPLIES", "XOR", "delta0", "delta1"};
  for (const char* name : kNames) {
    const Relation& b = builtin(name);
    if (b.arity() != g.claimed.arity()) continue;
    if (b == g.claimed) {
      g.claimed_name = name;
      return;
    }
    if (b.arity() == 2) {
      const std::array<int, 2> swap = {1, 0};
      if (b == g.claimed.permuted(swap)) {
        std::swap(g.distinguished[0], g.distinguished[1]);
        g.claimed = b;
        g.claimed_name = name;
        return;
      }
    }
  }
}

bool ternary_precondition(const Relation& r) {
  auto in = [&](const char* t) { return r.contains(BooleanTuple::parse(t)); };
  return r.arity() == 3 && in("000") && in("011") && in("101") && !in("110");
}

/// The case analysis over a ternary relation named `rel`.
Gadget ternary_case_over(const std::string& rel, const Relation& r, std::vector<std::string>& trace) {
  auto in = [&](const char* t) { return r.contains(BooleanTuple::parse(t)); };
  GadgetBuilder b;
  b.relation(rel, r);
  if (in("010") != in("111")) {
    b.constrain(rel, {"x", "y", "x"});
    if (!in("010")) {
      trace.push_back("ternary case: 010 excluded, 111 present; R(x,y,x) is IMPLIES(y,x)");
      return claim(b, {"y", "x"}, "IMPLIES");
    }
    trace.push_back("ternary case: 111 excluded, 010 present; R(x,y,x) is NAND(x,y)");
    return claim(b, {"x", "y"}, "NAND");
  }
  if (in("100") != in("111")) {
    b.constrain(rel, {"x", "y", "y"});
    if (!in("100")) {
      trace.push_back("ternary case: 100 excluded, 111 present; R(x,y,y) is IMPLIES(x,y)");
      return claim(b, {"x", "y"}, "IMPLIES");
    }
    trace.push_back("ternary case: 111 excluded, 100 present; R(x,y,y) is NAND(x,y)");
    return claim(b, {"x", "y"}, "NAND");
  }
  if (in("010") && in("100")) {
    b.constrain(rel, {"x", "y", "z"});
    b.constrain("delta0", {"z"});
    trace.push_back("ternary case: 010 and 100 present; R(x,y,z) and delta0(z) is NAND(x,y)");
    return claim(b, {"x", "y"}, "NAND");
  }
  b.constrain(rel, {"x", "y", "z"});
  if (!in("001")) {
    trace.push_back("ternary case: 010, 111, 100, 001 excluded; R(x,y,z) is NAND(x,y)");
    return claim(b, {"x", "y"}, "NAND");
  }
  b.constrain("delta0", {"x"});
  trace.push_back("ternary case: 010, 111, 100 excluded, 001 present; R(x,y,z) and delta0(x) is IMPLIES(y,z)");
  return claim(b, {"y", "z"}, "IMPLIES");
}

/// Runs the ternary case analysis on the relation implemented by `g3` (over
/// distinguished x, y, z) and inlines g3.
Gadget ternary_from_gadget(Gadget g3, std::vector<std::string>& trace) {
  g3.claimed = implemented_relation(g3);
  g3.claimed_name = kTernary;
  ensure_verified(g3, "ternary sub-gadget");
  if (!ternary_precondition(g3.claimed)) {
    throw InternalError("ternary sub-gadget implements " + g3.claimed.to_string() + ", not one of IMPLIES or NAND");
  }
  trace.push_back("x, y, z all occur; implemented R'(x,y,z) = " + g3.claimed.to_string());
  Gadget outer = ternary_case_over(kTernary, g3.claimed, trace);
  return compose(outer, kTernary, g3, "t");
}

/// The three-way split shared by the constructions whose implemented relation
/// over (x, y, z) contains 000, 011, 101 and excludes 110.
Gadget split_on_occurrence(const GadgetBuilder& b, bool x, bool y, bool z, std::vector<std::string>& trace,
                           const std::function<Gadget(Gadget)>& finish_body) {
  if (!y) {
    trace.push_back("y does not occur; R'(x,z) is IMPLIES");
    return finish_body(claim(b, {"x", "z"}, "IMPLIES"));
  }
  if (!x) {
    trace.push_back("x does not occur; R'(y,z) is IMPLIES");
    return finish_body(claim(b, {"y", "z"}, "IMPLIES"));
  }
  if (!z) {
    trace.push_back("z does not occur; R'(x,y) is NAND");
    return finish_body(claim(b, {"x", "y"}, "NAND"));
  }
  Gadget g3 = finish_body(b.finish({"x", "y", "z"}, kTernary, Relation(3), {}));
  return ternary_from_gadget(std::move(g3), trace);
}

Gadget non_affine_with_delta0(const std::string& name, const Relation& r) {
  std::vector<std::string> trace;
  const int k = r.arity();

  if (is_0_valid(r)) {
    const auto pair = non_affine_pair(r);
    trace.push_back("R is 0-valid; s=" + pair.a.to_string() + ", s'=" + pair.b.to_string() +
                    " with s^s'=" + pair.d.to_string() + " outside R");
    const Roles roles = assign_roles({pair.a, pair.b}, {{0b00, "w"}, {0b01, "x"}, {0b10, "y"}, {0b11, "z"}});
    GadgetBuilder b;
    b.relation(name, r);
    b.constrain(name, roles);
    if (has(roles, "w")) b.constrain("delta0", {"w"});
    trace.push_back("R'=" + render(name, roles) + (has(roles, "w") ? " and delta0(w)" : ""));
    Gadget g = split_on_occurrence(b, has(roles, "x"), has(roles, "y"), has(roles, "z"), trace,
                                   [](Gadget inner) { return inner; });
    g.trace = trace;
    return g;
  }

  // delta1 from {R, delta0}
  const BooleanTuple s0(k, r.members().front());
  const Roles d1_roles = assign_roles({s0}, {{0, "y"}, {1, "x"}});
  GadgetBuilder db;
  db.relation(name, r);
  db.constrain(name, d1_roles);
  if (has(d1_roles, "y")) db.constrain("delta0", {"y"});
  const Gadget d1 = claim(db, {"x"}, "delta1");
  ensure_verified(d1, "delta1 sub-gadget");
  trace.push_back("R is not 0-valid; delta1(x) = " + render(name, d1_roles) +
                  (has(d1_roles, "y") ? " and delta0(y)" : "") + " from s=" + s0.to_string());
  auto with_delta1 = [&d1](Gadget g) { return uses(g, "delta1") ? compose(g, "delta1", d1, "d") : g; };

  const auto and_violation = find_closure_violation(r, BinaryOp::And);
  if (!and_violation) {
    std::uint32_t meet = (1u << k) - 1u;
    for (auto m : r.members()) meet &= m;
    const BooleanTuple s(k, meet);
    if (!r.contains(s)) throw InternalError("intersection of an AND-closed relation is not a member");
    const auto [s1, s2] = non_affine_from_anchor(r, s);
    trace.push_back("R is AND-closed; s=" + s.to_string() + " (intersection), s'=" + s1.to_string() +
                    ", s''=" + s2.to_string());
    const Roles roles = assign_roles(
        {s, s1, s2}, {{0b000, "u"}, {0b001, "x"}, {0b010, "y"}, {0b011, "z"}, {0b111, "v"}});
    GadgetBuilder b;
    b.relation(name, r);
    b.constrain(name, roles);
    if (has(roles, "u")) b.constrain("delta0", {"u"});
    if (has(roles, "v")) b.constrain("delta1", {"v"});
    trace.push_back("R'=" + render(name, roles) + (has(roles, "u") ? " and delta0(u)" : "") +
                    (has(roles, "v") ? " and delta1(v)" : ""));
    Gadget g = split_on_occurrence(b, has(roles, "x"), has(roles, "y"), has(roles, "z"), trace, with_delta1);
    g.trace = trace;
    return g;
  }

  const BooleanTuple& t = and_violation->t;
  const BooleanTuple& t2 = and_violation->t2;
  const Roles xor_roles = assign_roles({t, t2}, {{0b00, "u"}, {0b01, "x"}, {0b10, "y"}, {0b11, "v"}});
  GadgetBuilder xb;
  xb.relation(name, r);
  xb.constrain(name, xor_roles);
  if (has(xor_roles, "u")) xb.constrain("delta0", {"u"});
  if (has(xor_roles, "v")) xb.constrain("delta1", {"v"});
  const BooleanTuple join = tuple_op(TupleOp::Or, {t, t2});
  trace.push_back("R is not AND-closed; t=" + t.to_string() + ", t'=" + t2.to_string() + ", t&t'=" +
                  and_violation->result.to_string() + " outside R; R'=" + render(name, xor_roles));
  if (r.contains(join)) {
    trace.push_back("t|t'=" + join.to_string() + " in R; R'(x,y) is OR");
    Gadget g = with_delta1(claim(xb, {"x", "y"}, "OR"));
    g.trace = trace;
    return g;
  }
  const Gadget gx = with_delta1(claim(xb, {"x", "y"}, "XOR"));
  ensure_verified(gx, "XOR sub-gadget");
  trace.push_back("t|t'=" + join.to_string() + " outside R; R'(x,y) is XOR");

  const auto w = non_affine_witness(r);
  trace.push_back("s=" + w.a.to_string() + ", s'=" + w.b.to_string() + ", s''=" + w.c->to_string() +
                  " with s^s'^s''=" + w.d.to_string() + " outside R");
  const Roles roles = assign_roles({w.a, w.b, *w.c}, {{0b000, "u"},
                                                      {0b001, "x"},
                                                      {0b010, "y"},
                                                      {0b011, "z"},
                                                      {0b100, "z'"},
                                                      {0b101, "y'"},
                                                      {0b110, "x'"},
                                                      {0b111, "u'"}});
  GadgetBuilder b;
  b.relation(name, r);
  b.constrain(name, roles);
  std::string desc = "R''=" + render(name, roles);
  if (has(roles, "u") || has(roles, "u'")) {
    b.constrain("delta0", {"u"});
    desc += " and delta0(u)";
  }
  for (const char* a : {"u", "x", "y", "z"}) {
    const std::string primed = std::string(a) + "'";
    if (has(roles, primed)) {
      b.constrain("XOR", {a, primed});
      desc += " and XOR(" + std::string(a) + "," + primed + ")";
    }
  }
  trace.push_back(desc);
  auto occurs = [&](const char* a) { return has(roles, a) || has(roles, std::string(a) + "'"); };
  auto with_xor = [&gx](Gadget g) { return uses(g, "XOR") ? compose(g, "XOR", gx, "r") : g; };
  Gadget g = split_on_occurrence(b, occurs("x"), occurs("y"), occurs("z"), trace, with_xor);
  g.trace = trace;
  return g;
}

/// Swaps each constraint on `from` for `to` (table `r`), exchanges delta0 and
/// delta1, and complements the claim.
Gadget dualize(const Gadget& g, const std::string& from, const std::string& to, const Relation& r) {
  GadgetBuilder b;
  b.relation(to, r);
  for (const auto& c : g.body.constraints()) {
    std::string rel;
    if (c.relation == from) {
      rel = to;
    } else if (c.relation == "delta0") {
      rel = "delta1";
    } else if (c.relation == "delta1") {
      rel = "delta0";
    } else {
      throw InternalError("dualize: unexpected relation " + c.relation);
    }
    b.constrain(rel, c.scope);
  }
  auto trace = g.trace;
  trace.push_back("complemented: every tuple flipped, delta1 in place of delta0");
  Gadget out = b.finish(g.distinguished, g.claimed_name, g.claimed.complement(), std::move(trace));
  canonicalize_claim(out);
  return out;
}

}  // namespace

Gadget pin_from_validity(const std::string& name, const Relation& r) {
  const bool v0 = is_0_valid(r);
  const bool v1 = is_1_valid(r);
  if (v0 == v1) throw PreconditionError("pin_from_validity: relation must be exactly one of 0-valid and 1-valid");
  GadgetBuilder b;
  b.relation(name, r);
  b.constrain(name, Roles(static_cast<std::size_t>(r.arity()), "x"));
  Gadget g = claim(b, {"x"}, v0 ? "delta0" : "delta1");
  g.trace.push_back(std::string(v0 ? "0-valid, not 1-valid" : "1-valid, not 0-valid") + "; diagonal R(x,...,x)");
  ensure_verified(g, "pin_from_validity");
  return g;
}

std::vector<Gadget> from_non_complement_closed(const std::string& name, const Relation& r) {
  if (is_complement_closed(r)) throw PreconditionError("from_non_complement_closed: relation is complement-closed");
  const bool v0 = is_0_valid(r);
  const bool v1 = is_1_valid(r);
  if (v0 != v1) {
    throw PreconditionError("from_non_complement_closed: relation is exactly one of 0-valid and 1-valid");
  }
  const int k = r.arity();
  std::uint32_t pick = 0;
  for (auto m : r.members()) {
    if (!r.contains(~m & ((1u << k) - 1u))) {
      pick = m;
      break;
    }
  }
  const BooleanTuple s(k, pick);
  const Roles roles = assign_roles({s}, {{0, "y"}, {1, "x"}});
  GadgetBuilder b;
  b.relation(name, r);
  b.constrain(name, roles);
  const std::string desc = "s=" + s.to_string() + " with complement outside R; R'(x,y)=" + render(name, roles);

  std::vector<Gadget> out;
  if (v0) {
    Gadget g = b.finish({"x", "y"}, "", Relation::of({"00", "11", "10"}), {desc + " = {00,11,10}"});
    canonicalize_claim(g);
    out.push_back(std::move(g));
  } else {
    out.push_back(claim(b, {"x"}, "delta1"));
    out.back().trace = {desc + " = {10}; delta1 on x"};
    out.push_back(claim(b, {"y"}, "delta0"));
    out.back().trace = {desc + " = {10}; delta0 on y"};
  }
  for (const auto& g : out) ensure_verified(g, "from_non_complement_closed");
  return out;
}

Gadget from_ternary_case(const std::string& name, const Relation& r) {
  if (!ternary_precondition(r)) {
    throw PreconditionError("from_ternary_case: relation must be ternary, contain 000, 011, 101 and exclude 110");
  }
  std::vector<std::string> trace;
  Gadget g = ternary_case_over(name, r, trace);
  g.trace = trace;
  ensure_verified(g, "from_ternary_case");
  return g;
}

Gadget from_non_affine(const std::string& name, const Relation& r, int pin) {
  if (pin != 0 && pin != 1) throw PreconditionError("pin must be 0 or 1");
  if (is_affine(r)) throw PreconditionError("from_non_affine: relation " + r.to_string() + " is affine");
  Gadget g = [&] {
    if (pin == 0) return non_affine_with_delta0(name, r);
    const std::string dual = name + "__dual";
    return dualize(non_affine_with_delta0(dual, r.complement()), dual, name, r);
  }();
  ensure_verified(g, "from_non_affine");
  return g;
}

Gadget nand_from_implies_xor() {
  GadgetBuilder b;
  b.constrain("IMPLIES", {"x", "y"});
  b.constrain("XOR", {"y", "z"});
  Gadget g = claim(b, {"x", "z"}, "NAND");
  g.trace.push_back("NAND(x,z) = IMPLIES(x,y) and XOR(y,z)");
  ensure_verified(g, "nand_from_implies_xor");
  return g;
}

Gadget or_or_xor_from_im2_violation(const std::string& name, const Relation& r2, const Im2Witness& w) {
  const int k = r2.arity();
  if (w.t.arity() != k || w.t2.arity() != k || w.result.arity() != k) {
    throw PreconditionError("IM2 witness arity differs from the relation");
  }
  const TupleOp op = w.op == BinaryOp::And ? TupleOp::And : TupleOp::Or;
  if (!r2.contains(w.t) || !r2.contains(w.t2) || tuple_op(op, {w.t, w.t2}) != w.result || r2.contains(w.result)) {
    throw PreconditionError("invalid IM2 witness for " + r2.to_string());
  }
  const Roles roles = assign_roles({w.t, w.t2}, {{0b00, "u"}, {0b01, "x"}, {0b10, "y"}, {0b11, "v"}});
  GadgetBuilder b;
  b.relation(name, r2);
  b.constrain(name, roles);
  if (has(roles, "u")) b.constrain("delta0", {"u"});
  if (has(roles, "v")) b.constrain("delta1", {"v"});

  std::string target;
  std::string why;
  if (w.op == BinaryOp::And) {
    const auto join = tuple_op(TupleOp::Or, {w.t, w.t2});
    target = r2.contains(join) ? "OR" : "XOR";
    why = "t|t'=" + join.to_string() + (r2.contains(join) ? " in R" : " outside R");
  } else {
    const auto meet = tuple_op(TupleOp::And, {w.t, w.t2});
    target = r2.contains(meet) ? "NAND" : "XOR";
    why = "t&t'=" + meet.to_string() + (r2.contains(meet) ? " in R" : " outside R");
  }
  Gadget g = claim(b, {"x", "y"}, target);
  g.trace.push_back(std::string(w.op == BinaryOp::And ? "AND" : "OR") + " violation t=" + w.t.to_string() +
                    ", t'=" + w.t2.to_string() + "; R'=" + render(name, roles) + "; " + why + "; R'(x,y) is " +
                    target);
  ensure_verified(g, "or_or_xor_from_im2_violation");
  return g;
}

}  // namespace sharpcsp
