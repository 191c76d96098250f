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

#include "sharpcsp/chain.h"

#include <algorithm>

#include "sharpcsp/gadget_library.h"

namespace sharpcsp {

namespace {

bool body_uses(const Gadget& g, const std::string& relation) {
  const auto used = g.body.used_relations();
  return std::find(used.begin(), used.end(), relation) != used.end();
}

class ChainBuilder {
 public:
  ChainBuilder(HardnessChain& chain, const ChainOptions& options) : chain_(chain), options_(options) {}

  void start(std::string label, Instance encoded) {
    ChainStep s{std::move(label), std::move(encoded), RecoveryRecipe::identity(), std::nullopt, true};
    if (options_.verify) {
      s.count = brute_force_count(s.instance, {options_.cap, 0});
      s.identity_ok = *s.count == chain_.source_count;
      if (!s.identity_ok) fail(s);
    }
    chain_.steps.push_back(std::move(s));
  }

  void push(std::string label, Reduction r) {
    ChainStep s{std::move(label), prune_language(r.instance), std::move(r.recipe), std::nullopt, true};
    if (options_.verify) {
      s.count = brute_force_count(s.instance, {options_.cap, 0});
      s.identity_ok = s.recipe.apply(*s.count) == *chain_.steps.back().count;
      if (!s.identity_ok) fail(s);
    }
    chain_.steps.push_back(std::move(s));
  }

  void push_all(std::vector<ReductionStep> steps) {
    for (auto& s : steps) push(std::move(s.label), std::move(s.result));
  }

  /// Inlines `g` for `target` unless the gadget is already over `target`
  /// itself or the instance does not use it.
  void inline_for(const std::string& target, const Gadget& g, const std::string& prefix) {
    if (body_uses(g, target) || !current().language().contains(target)) return;
    push("inline gadget for " + target, inline_gadget_reduce(current(), g, target, prefix));
  }

  const Instance& current() const { return chain_.steps.back().instance; }

 private:
  [[noreturn]] void fail(const ChainStep& s) {
    throw InternalError("chain step '" + s.label + "' breaks its count identity (count " + to_string(*s.count) + ")");
  }

  HardnessChain& chain_;
  const ChainOptions& options_;
};

void note_gadget(HardnessChain& chain, const std::string& what, const Gadget& g) {
  chain.notes.push_back(what + ": claims " + g.claimed_name + "(" + [&] {
    std::string s;
    for (std::size_t i = 0; i < g.distinguished.size(); ++i) s += (i ? "," : "") + g.distinguished[i];
    return s;
  }() + ")");
  for (const auto& t : g.trace) chain.notes.push_back("  " + t);
}

}  // namespace

HardnessChain compile_hardness_chain(const ConstraintLanguage& gamma, const GraphInput& source,
                                     const ChainOptions& options) {
  HardnessChain chain{classify(gamma), choose_pinning(gamma), 0, {}, {}, {}, 0, std::nullopt};
  const bool is_graph = std::holds_alternative<Graph>(source);
  const Verdict v = chain.classification.verdict;
  if (is_graph && v != Verdict::SatEquivalent) {
    throw PreconditionError("#IS source needs a SAT-equivalent language; verdict is " + to_string(v));
  }
  if (!is_graph && v != Verdict::BisEquivalent) {
    throw PreconditionError("#BIS source needs a BIS-equivalent language; verdict is " + to_string(v));
  }
  chain.source_count = std::visit([](const auto& g) { return count_independent_sets(g); }, source);

  const auto& strategy = chain.strategy;
  const int p = strategy.available(0) ? 0 : 1;
  chain.pin = p;
  chain.notes.push_back("pinning: " + strategy.branch);
  for (int value : {0, 1}) {
    if (strategy.available(value)) {
      chain.notes.push_back("  delta" + std::to_string(value) + ": " + to_string(strategy.pins[value]->kind) + ", " +
                            strategy.pins[value]->note);
    }
  }

  const std::string r1 = *chain.classification.affine_relation;
  const Gadget g1 = from_non_affine(r1, gamma.at(r1), p);
  note_gadget(chain, "from " + r1 + " with delta" + std::to_string(p), g1);

  ChainBuilder b(chain, options);
  if (!is_graph) {
    if (g1.claimed_name != "IMPLIES") throw InternalError("IM2 language produced a " + g1.claimed_name + " gadget");
    b.start("encode #BIS with IMPLIES", encode_bis(std::get<BipartiteGraph>(source)));
    b.inline_for("IMPLIES", g1, "a");
  } else {
    const Graph& g = std::get<Graph>(source);
    if (g1.claimed_name == "OR") {
      b.start("encode #IS with OR", encode_is_or(g));
      b.inline_for("OR", g1, "a");
    } else if (g1.claimed_name == "NAND") {
      b.start("encode #IS with NAND", encode_is_nand(g));
      b.inline_for("NAND", g1, "a");
    } else {
      const std::string r2 = *chain.classification.im2_relation;
      const Gadget g2 = or_or_xor_from_im2_violation(r2, gamma.at(r2), *chain.classification.im2_evidence);
      note_gadget(chain, "from " + r2 + " with delta0 and delta1", g2);
      if (g2.claimed_name == "OR") {
        b.start("encode #IS with OR", encode_is_or(g));
        b.inline_for("OR", g2, "b");
      } else if (g2.claimed_name == "NAND") {
        b.start("encode #IS with NAND", encode_is_nand(g));
        b.inline_for("NAND", g2, "b");
      } else {
        const Gadget gn = nand_from_implies_xor();
        note_gadget(chain, "from IMPLIES and XOR", gn);
        b.start("encode #IS with NAND", encode_is_nand(g));
        b.inline_for("NAND", gn, "n");
        b.inline_for("XOR", g2, "b");
      }
      // the other constant, then IMPLIES
      const int q = 1 - p;
      PinMethod method;
      if (strategy.available(q) && strategy.pins[q]->kind != PinMethod::Kind::Merge) {
        method = *strategy.pins[q];
      } else {
        method = PinMethod{PinMethod::Kind::GadgetMajority, "IMPLIES", builtin("IMPLIES"), q == 1 ? 2 : 1, g1,
                           "column of IMPLIES implemented by " + r1};
      }
      chain.notes.push_back("delta" + std::to_string(q) + " for the chain: " + to_string(method.kind) + ", " +
                            method.note);
      b.push_all(eliminate_pin(b.current(), q, method));
      b.inline_for("IMPLIES", g1, "a");
    }
  }
  b.push_all(eliminate_pin(b.current(), p, *strategy.pins[p]));

  RecoveryRecipe recipe;
  for (auto it = chain.steps.rbegin(); it != chain.steps.rend(); ++it) {
    recipe.steps.insert(recipe.steps.end(), it->recipe.steps.begin(), it->recipe.steps.end());
  }
  chain.recipe = std::move(recipe);
  if (options.verify) chain.recovered = chain.recipe.apply(*chain.steps.back().count);
  return chain;
}

}  // namespace sharpcsp
