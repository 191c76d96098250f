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

#include <gtest/gtest.h>

#include "oracles.h"
#include "sharpcsp/brute_force.h"
#include "sharpcsp/instance.h"

using namespace sharpcsp;

namespace {

Instance parse(const std::string& s) { return Instance::parse(s); }

InstanceParseError::Kind kind_of(const std::string& s) {
  try {
    parse(s);
  } catch (const InstanceParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no parse error for: " << s;
  return InstanceParseError::Kind::Syntax;
}

}  // namespace

TEST(InstanceParse, Basics) {
  const auto i = parse("vars x y\nconstraint IMPLIES x y\n");
  EXPECT_EQ(i.constraints().size(), 1u);
  EXPECT_EQ(kind_of("vars x\nconstraint OR x\n"), InstanceParseError::Kind::ArityMismatch);
  EXPECT_EQ(kind_of("vars x\nconstraint FOO x\n"), InstanceParseError::Kind::UnknownRelation);
  EXPECT_EQ(kind_of("vars x\nconstraint IMPLIES x y\n"), InstanceParseError::Kind::UnknownVariable);
  EXPECT_EQ(kind_of("vars x\nbogus\n"), InstanceParseError::Kind::Syntax);
  try {
    parse("vars x\n\nconstraint OR x\n");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(InstanceParse, LanguageDirectiveAndInlineBlocks) {
  const auto loader = [](const std::string& path) -> std::string {
    if (path == "par.cl") return "relation PAR 3\n001\n010\n100\n111\nend\n";
    throw ParseError("missing " + path, 0);
  };
  const auto i = Instance::parse("language par.cl\nvars a b c\nconstraint PAR a b c\n", loader);
  EXPECT_EQ(brute_force_count(i), Count(4));
  const auto j = Instance::parse("relation Q 1\n1\nend\nvars a\nconstraint Q a\n");
  EXPECT_EQ(brute_force_count(j), Count(1));
  const auto round = Instance::parse(i.to_text());
  EXPECT_EQ(round.constraints(), i.constraints());
  EXPECT_EQ(round.variables(), i.variables());
}

TEST(Satisfies, Examples) {
  const auto i = parse("vars x y\nconstraint IMPLIES x y\n");
  EXPECT_FALSE(satisfies(i, {{"x", true}, {"y", false}}));
  EXPECT_TRUE(satisfies(i, {{"x", false}, {"y", true}}));
  EXPECT_THROW(satisfies(i, {{"x", false}}), PreconditionError);
  const auto n = parse("vars x\nconstraint NAND x x\n");
  EXPECT_FALSE(satisfies(n, {{"x", true}}));
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_count(parse("vars u v\nconstraint NAND u v\n")), Count(3));
  EXPECT_EQ(brute_force_count(parse("vars a b c\nconstraint IMPLIES a b\nconstraint IMPLIES b c\n")), Count(4));
  EXPECT_EQ(brute_force_count(parse("vars a b c d e\n")), Count(32));
  std::string big = "vars";
  for (int i = 0; i < 30; ++i) big += " x" + std::to_string(i);
  big += "\nconstraint OR x0 x1\n";
  EXPECT_THROW(brute_force_count(parse(big)), ResourceError);
}

TEST(BruteForce, AgreesWithSatisfiesAndOracle) {
  std::mt19937_64 rng(21);
  ConstraintLanguage lang;
  lang.add("R", oracle::relation_from_mask(3, 0xb6));
  lang.add_builtin("OR");
  lang.add_builtin("delta1");
  for (int t = 0; t < 60; ++t) {
    const auto inst = oracle::random_instance(rng, lang, {"R", "OR", "delta1"}, 1 + static_cast<int>(rng() % 9),
                                              static_cast<int>(rng() % 8));
    std::uint64_t via_satisfies = 0;
    const auto& vars = inst.variables();
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << vars.size()); ++a) {
      Assignment s;
      for (std::size_t i = 0; i < vars.size(); ++i) s[vars[i]] = a >> i & 1u;
      via_satisfies += satisfies(inst, s);
    }
    const auto bf = brute_force_count(inst);
    ASSERT_EQ(bf, Count(via_satisfies));
    ASSERT_EQ(bf, Count(oracle::count(inst)));
    ASSERT_EQ(Count(enumerate_satisfying(inst).size()), bf);
  }
}

TEST(BruteForce, ThreadedMatchesSequential) {
  std::mt19937_64 rng(22);
  ConstraintLanguage lang;
  lang.add_builtin("OR");
  lang.add_builtin("NAND");
  const auto inst = oracle::random_instance(rng, lang, {"OR", "NAND"}, 18, 14);
  EXPECT_EQ(brute_force_count(inst, {24, 1}), brute_force_count(inst, {24, 4}));
}

TEST(BruteForce, RenamingAndReorderingInvariant) {
  std::mt19937_64 rng(23);
  ConstraintLanguage lang;
  lang.add_builtin("IMPLIES");
  lang.add_builtin("NAND");
  for (int t = 0; t < 30; ++t) {
    const auto inst = oracle::random_instance(rng, lang, {"IMPLIES", "NAND"}, 7, 6);
    std::vector<std::string> vars;
    std::map<std::string, std::string> ren;
    for (const auto& v : inst.variables()) {
      ren[v] = "w_" + v;
      vars.push_back(ren[v]);
    }
    std::vector<Constraint> cs;
    for (auto it = inst.constraints().rbegin(); it != inst.constraints().rend(); ++it) {
      Constraint c{it->relation, {}};
      for (const auto& v : it->scope) c.scope.push_back(ren[v]);
      cs.push_back(c);
    }
    std::reverse(vars.begin(), vars.end());
    EXPECT_EQ(brute_force_count(inst), brute_force_count(Instance(lang, vars, cs)));
  }
}

TEST(PinnedAndForced, Examples) {
  EXPECT_EQ(pinned_vars(parse("vars x y\nconstraint delta0 x\nconstraint IMPLIES x y\n"), 0),
            std::set<std::string>{"x"});
  EXPECT_TRUE(pinned_vars(parse("vars x y\nconstraint IMPLIES x y\n"), 0).empty());
  EXPECT_EQ(pinned_vars(parse("vars x\nconstraint delta0 x\nconstraint delta0 x\n"), 0), std::set<std::string>{"x"});

  const auto f = forced_vars(parse("vars a b\nconstraint IMPLIES a b\nconstraint delta0 b\n"));
  EXPECT_EQ(f.zero, (std::set<std::string>{"a", "b"}));
  EXPECT_TRUE(f.one.empty());
  const auto g = forced_vars(parse("vars a b\nconstraint delta1 a\nconstraint IMPLIES a b\n"));
  EXPECT_EQ(g.one, (std::set<std::string>{"a", "b"}));
  const auto h = forced_vars(parse("vars a b\nconstraint IMPLIES a b\n"));
  EXPECT_TRUE(h.zero.empty() && h.one.empty());
  EXPECT_THROW(forced_vars(parse("vars a b\nconstraint OR a b\n")), PreconditionError);
}

TEST(PinnedAndForced, ContradictionMeansZeroCount) {
  std::mt19937_64 rng(24);
  ConstraintLanguage lang;
  lang.add_builtin("IMPLIES");
  lang.add_builtin("delta0");
  lang.add_builtin("delta1");
  int contradictions = 0;
  for (int t = 0; t < 200; ++t) {
    const auto inst = oracle::random_instance(rng, lang, {"IMPLIES", "IMPLIES", "delta0", "delta1"}, 6, 6);
    const auto f = forced_vars(inst);
    bool clash = false;
    for (const auto& v : f.zero) clash = clash || f.one.count(v);
    if (clash) {
      ++contradictions;
      ASSERT_EQ(brute_force_count(inst), Count(0));
    }
  }
  EXPECT_GT(contradictions, 0);
}
