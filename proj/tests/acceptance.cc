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

// One PASS/FAIL line per acceptance criterion. Every expected value comes
// from the independent evaluators in oracles.h, never from the library
// under test.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "oracles.h"
#include "sharpcsp/affine_count.h"
#include "sharpcsp/chain.h"
#include "sharpcsp/classifier.h"
#include "sharpcsp/downsets.h"
#include "sharpcsp/gadget_library.h"
#include "sharpcsp/gf2.h"
#include "sharpcsp/reductions.h"
#include "sharpcsp/relation_props.h"
#include "sharpcsp/rounding.h"

using namespace sharpcsp;

namespace {

// Collects the first few failure messages of a criterion.
struct Check {
  int failures = 0;
  std::ostringstream detail;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ < 3) detail << " [" << what << "]";
  }
};

ConstraintLanguage lang(std::vector<std::pair<std::string, Relation>> rels) {
  ConstraintLanguage l;
  for (auto& [n, r] : rels) l.add(n, r);
  return l;
}

Count ipow(const Count& b, std::size_t e) {
  Count r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

std::string str(const Count& c) { return c.str(); }

void criterion1(Check& c) {
  int tables = 0, im2 = 0;
  for (int k = 1; k <= 3; ++k) {
    const std::uint64_t total = std::uint64_t{1} << (1u << k);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const auto r = oracle::relation_from_mask(k, mask);
      const auto ts = oracle::tuples_of(r);
      ++tables;
      c.expect(is_affine(r) == oracle::affine(ts), "affine " + r.to_string());
      const bool m = oracle::im2(ts);
      c.expect(is_in_im2(r) == m, "im2 " + r.to_string());
      im2 += m;
      // the formula builder's domain excludes the empty relation
      if (m && !r.empty()) {
        c.expect(im2_formula(r).evaluate() == r, "formula " + r.to_string());
      }
    }
  }
  c.expect(tables == 276, "table count");
  c.summary = std::to_string(tables) + " tables, " + std::to_string(im2) + " in IM2";
}

void criterion2(Check& c) {
  const auto v = [](ConstraintLanguage l) { return classify(l).verdict; };
  c.expect(v(lang({{"XOR", builtin("XOR")}})) == Verdict::ExactPolyTime, "XOR");
  c.expect(v(lang({{"IMPLIES", builtin("IMPLIES")}})) == Verdict::BisEquivalent, "IMPLIES");
  c.expect(v(lang({{"OR", builtin("OR")}})) == Verdict::SatEquivalent, "OR");
  c.expect(v(lang({{"NAND", builtin("NAND")}})) == Verdict::SatEquivalent, "NAND");
  c.expect(v(lang({{"IMPLIES", builtin("IMPLIES")}, {"delta0", builtin("delta0")}, {"delta1", builtin("delta1")}})) ==
               Verdict::BisEquivalent,
           "IMPLIES+deltas");
  c.expect(v(lang({{"P", Relation::of({"000", "011", "101", "110"})}})) == Verdict::ExactPolyTime, "parity-3");
  c.summary = "6 fixtures";
}

void criterion3(Check& c) {
  std::mt19937_64 rng(3);
  ConstraintLanguage l;
  std::vector<std::string> names;
  for (int k = 1; k <= 4; ++k) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (1u << k)); ++mask) {
      const auto r = oracle::relation_from_mask(k, mask);
      if (!oracle::affine(oracle::tuples_of(r))) continue;
      names.push_back("A" + std::to_string(k) + "_" + std::to_string(mask));
      l.add(names.back(), r);
    }
  }
  int nonzero = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 16);
    const auto inst = oracle::random_instance(rng, l, names, n, static_cast<int>(rng() % (n + 2)));
    const Count g = count_solutions(instance_to_system(inst));
    const Count b(oracle::count(inst));
    c.expect(g == b, "seed trial " + std::to_string(t) + ": " + str(g) + " vs " + str(b));
    nonzero += b != 0;
  }
  c.summary = "200 instances, " + std::to_string(names.size()) + " affine tables, " + std::to_string(nonzero) +
              " satisfiable";
}

bool binary_target(const Gadget& g) {
  return g.claimed_name == "OR" || g.claimed_name == "IMPLIES" || g.claimed_name == "NAND";
}

void criterion4(Check& c) {
  int built = 0, ternary = 0;
  for (int k = 1; k <= 3; ++k) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (1u << k)); ++mask) {
      const auto r = oracle::relation_from_mask(k, mask);
      if (oracle::affine(oracle::tuples_of(r))) continue;
      for (int pin : {0, 1}) {
        try {
          const auto g = from_non_affine("R", r, pin);
          c.expect(binary_target(g), "claim " + g.claimed_name + " for " + r.to_string());
          c.expect(verify_implementation(g), "verify " + r.to_string());
          c.expect(oracle::implements(g, builtin(g.claimed_name)), "oracle " + r.to_string());
          ++built;
        } catch (const std::exception& e) {
          c.expect(false, r.to_string() + ": " + e.what());
        }
      }
    }
  }
  for (std::uint64_t mask = 0; mask < 256; ++mask) {
    const auto r = oracle::relation_from_mask(3, mask);
    const auto ts = oracle::tuples_of(r);
    if (!(ts.count(0b000) && ts.count(0b011) && ts.count(0b101) && !ts.count(0b110))) continue;
    ++ternary;
    try {
      const auto g = from_ternary_case("R", r);
      c.expect(binary_target(g) && verify_implementation(g) && oracle::implements(g, builtin(g.claimed_name)),
               "ternary " + r.to_string());
    } catch (const std::exception& e) {
      c.expect(false, r.to_string() + ": " + e.what());
    }
  }
  c.summary = std::to_string(built) + " non-affine gadgets, " + std::to_string(ternary) + " ternary-case gadgets";
}

void criterion5(Check& c) {
  std::mt19937_64 rng(5);
  const auto l = lang({{"IMPLIES", builtin("IMPLIES")}, {"delta0", builtin("delta0")}});
  std::size_t max_vars = 0;
  int trials = 0;
  while (trials < 100) {
    const int n = 1 + static_cast<int>(rng() % 10);
    auto inst = oracle::random_instance(rng, l, {"IMPLIES", "IMPLIES", "IMPLIES", "delta0"}, n,
                                        static_cast<int>(rng() % (n + 3)));
    if (pinned_vars(inst, 0).size() > 2) continue;
    ++trials;
    const auto plan = make_pinning_plan(inst, "IMPLIES", builtin("IMPLIES"), 0);
    const auto red = pinning_reduce(inst, plan);
    max_vars = std::max(max_vars, red.instance.num_variables());
    const Count a(oracle::count(inst));
    const Count b = oracle::count_with_pendants(red.instance, inst.variables());
    const Count scale = ipow(plan.w, plan.m * plan.n0);
    c.expect(b / scale == a, "floor identity " + str(b) + "/" + str(scale) + " vs " + str(a));
    c.expect(red.recipe.apply(b) == a, "recipe");
    if (plan.n0 > 0) {
      const Count slack = ipow(2, plan.n) * ipow(plan.w, plan.m * (plan.n0 - 1)) * ipow(plan.w2, plan.m);
      c.expect(a * scale <= b && b <= a * scale + slack, "sandwich");
    }
  }
  c.summary = "100 instances, transformed sizes up to " + std::to_string(max_vars) + " variables";
}

void criterion6(Check& c) {
  std::mt19937_64 rng(6);
  const auto l = lang({{"XOR", builtin("XOR")}, {"delta0", builtin("delta0")}});
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const auto inst = oracle::random_instance(rng, l, {"XOR", "XOR", "delta0"}, n, static_cast<int>(rng() % (n + 2)));
    const auto red = merge_reduce(inst);
    c.expect(oracle::count(red.instance) == 2 * oracle::count(inst), "trial " + std::to_string(t));
    c.expect(red.recipe.apply(Count(oracle::count(red.instance))) == Count(oracle::count(inst)), "recipe");
  }
  c.summary = "100 instances";
}

void criterion7(Check& c) {
  int graphs = 0;
  const auto check_graph = [&](const Graph& g) {
    const Count is(oracle::independent_sets(g.n, g.edges));
    c.expect(Count(oracle::count(encode_is_nand(g))) == is, "nand " + to_text(g));
    c.expect(Count(oracle::count(encode_is_or(g))) == is, "or " + to_text(g));
    ++graphs;
  };
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<int, int>> all;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
      Graph g{n, {}};
      for (std::size_t e = 0; e < all.size(); ++e)
        if (mask >> e & 1u) g.edges.push_back(all[e]);
      check_graph(g);
    }
  }
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) check_graph(oracle::random_graph(rng, 1 + static_cast<int>(rng() % 8), 0.4));
  int bip = 0;
  for (int l = 1; l <= 3; ++l) {
    for (int r = 1; r <= 3; ++r) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (l * r)); ++mask) {
        BipartiteGraph g{l, r, {}};
        for (int e = 0; e < l * r; ++e)
          if (mask >> e & 1u) g.edges.emplace_back(e / r + 1, e % r + 1);
        c.expect(Count(oracle::count(encode_bis(g))) == Count(oracle::independent_sets(g)), "bis " + to_text(g));
        ++bip;
      }
    }
  }
  for (int t = 0; t < 100; ++t) {
    const int l = 1 + static_cast<int>(rng() % 4);
    const auto g = oracle::random_bipartite(rng, l, 1 + static_cast<int>(rng() % (8 - l)), 0.4);
    c.expect(Count(oracle::count(encode_bis(g))) == Count(oracle::independent_sets(g)), "bis " + to_text(g));
    ++bip;
  }
  c.summary = std::to_string(graphs) + " graphs, " + std::to_string(bip) + " bipartite graphs";
}

void criterion8(Check& c) {
  std::mt19937_64 rng(8);
  const auto l = lang({{"IMPLIES", builtin("IMPLIES")}, {"delta0", builtin("delta0")}, {"delta1", builtin("delta1")}});
  std::vector<Instance> cases;
  // forced contradiction and a mutual-implication cycle, then random ones
  cases.push_back(Instance::parse("vars a b c\nconstraint delta1 a\nconstraint IMPLIES a b\nconstraint IMPLIES b c\n"
                                  "constraint delta0 c\n"));
  cases.push_back(Instance::parse("vars a b c d\nconstraint IMPLIES a b\nconstraint IMPLIES b c\n"
                                  "constraint IMPLIES c a\nconstraint IMPLIES c d\n"));
  while (cases.size() < 100) {
    const int n = 1 + static_cast<int>(rng() % 12);
    cases.push_back(oracle::random_instance(rng, l, {"IMPLIES", "IMPLIES", "IMPLIES", "delta0", "delta1"}, n,
                                            static_cast<int>(rng() % (2 * n + 1))));
  }
  int unsat = 0, collapsed = 0;
  for (const auto& inst : cases) {
    const Count expected(oracle::count(inst));
    const auto p = im2_to_downsets(inst);
    if (!p) {
      ++unsat;
      c.expect(expected == 0, "unsatisfiable verdict on a satisfiable instance");
      continue;
    }
    for (const auto& e : p->elements) collapsed += e.find('=') != std::string::npos;
    c.expect(count_downsets(*p) == expected, "downsets " + str(count_downsets(*p)) + " vs " + str(expected));
    c.expect(Count(oracle::downsets(p->leq)) == expected, "oracle downsets");
  }
  c.expect(unsat > 0 && collapsed > 0, "coverage of contradiction and cycle cases");
  c.summary = "100 instances, " + std::to_string(unsat) + " unsatisfiable, " + std::to_string(collapsed) +
              " collapsed cycle classes";
}

void criterion9(Check& c) {
  int trials = 0;
  for (const double eps : {0.05, 0.1, 0.3, 0.5, 0.9}) {
    const long double delta = static_cast<long double>(eps) / 21;
    for (int n = 0; n <= 100; ++n) {
      for (const Count scale : {Count(4), Count(1024), ipow(2, 40)}) {
        const auto rep = ap_rounding_simulate(n, scale, eps, NoiseMode::WorstCase);
        const long double lo = n * std::exp(-static_cast<long double>(eps));
        const long double hi = n * std::exp(static_cast<long double>(eps));
        // endpoints recomputed here: offset 0 shrunk, offset floor(scale/4) grown
        const long double q_lo = n * std::exp(-delta);
        const long double q_hi = (n + static_cast<long double>(Count(scale / 4)) / static_cast<long double>(scale)) *
                                 std::exp(delta);
        for (const long double q : {q_lo, q_hi}) {
          const long double rec = std::ceil(q - 0.5L);
          c.expect(rec >= lo - 1e-12L && rec <= hi + 1e-12L, "interval");
          if (n * eps <= 2.0) c.expect(rec == n, "exact at N=" + std::to_string(n) + " eps=" + std::to_string(eps));
        }
        for (const auto& t : rep.trials) {
          ++trials;
          const auto r = static_cast<long double>(t.recovered);
          c.expect(r >= lo - 1e-12L && r <= hi + 1e-12L, "library interval");
          if (n * eps <= 2.0) c.expect(t.recovered == n, "library exact");
        }
      }
    }
  }
  c.summary = std::to_string(trials) + " worst-case trials";
}

void criterion10(Check& c) {
  const auto run = [&](const std::string& what, const ConstraintLanguage& l, const GraphInput& g, long expect) {
    try {
      const auto ch = compile_hardness_chain(l, g);
      c.expect(ch.recovered && *ch.recovered == expect, what + " recovered");
      for (const auto& s : ch.steps) c.expect(s.identity_ok, what + " step " + s.label);
      c.expect(Count(oracle::count(ch.final_instance())) == *ch.steps.back().count, what + " final count");
      for (const auto& con : ch.final_instance().constraints())
        c.expect(l.contains(con.relation), what + " foreign relation " + con.relation);
    } catch (const std::exception& e) {
      c.expect(false, what + ": " + e.what());
    }
  };
  run("OR/C4", lang({{"OR", builtin("OR")}}), cycle_graph(4), 7);
  run("NAND/C4", lang({{"NAND", builtin("NAND")}}), cycle_graph(4), 7);
  run("IMPLIES/edge", lang({{"IMPLIES", builtin("IMPLIES")}}), BipartiteGraph{1, 1, {{1, 1}}}, 3);
  c.summary = "3 chains";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"exhaustive classifier ground truth", criterion1},
      {"trichotomy fixtures", criterion2},
      {"affine counting identity", criterion3},
      {"gadget soundness sweep", criterion4},
      {"pinning identity", criterion5},
      {"merge identity", criterion6},
      {"encoding bijections", criterion7},
      {"downsets identity", criterion8},
      {"rounding analysis", criterion9},
      {"end-to-end hardness chains", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = c.failures == 0;
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << c.summary
              << "; " << std::fixed << std::setprecision(2) << secs << " s)";
    if (!ok) std::cout << " " << c.failures << " failures:" << c.detail.str();
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
