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
#include "sharpcsp/affine_count.h"
#include "sharpcsp/relation_props.h"

using namespace sharpcsp;

namespace {

std::vector<Relation> affine_tables(int max_arity) {
  std::vector<Relation> out;
  for (int k = 1; k <= max_arity; ++k) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (1 << k)); ++mask) {
      const auto r = oracle::relation_from_mask(k, mask);
      if (oracle::affine(oracle::tuples_of(r))) out.push_back(r);
    }
  }
  return out;
}

}  // namespace

TEST(RelationToSystem, Examples) {
  EXPECT_EQ(relation_to_system(builtin("XOR")).to_string(), "x1+x2=1\n");
  EXPECT_EQ(relation_to_system(Relation::of({"001", "010", "100", "111"})).to_string(), "x1+x2+x3=1\n");
  EXPECT_EQ(relation_to_system(builtin("delta0")).to_string(), "x1=0\n");
  const auto empty = relation_to_system(Relation(2));
  EXPECT_EQ(count_solutions(empty), Count(0));
  EXPECT_THROW(relation_to_system(builtin("OR")), PreconditionError);
}

TEST(RelationToSystem, RoundTripEveryAffineTableUpToArity4) {
  const auto tables = affine_tables(4);
  EXPECT_GT(tables.size(), 100u);
  for (const auto& r : tables) ASSERT_EQ(solution_relation(relation_to_system(r)), r) << r.to_string();
  EXPECT_EQ(solution_relation(relation_to_system(Relation(3))), Relation(3));
}

TEST(CountSolutions, Examples) {
  Gf2System s{3, {}};
  boost::dynamic_bitset<> row(3);
  row[0] = row[1] = true;
  s.rows.push_back({row, true});
  EXPECT_EQ(count_solutions(s), Count(4));
  Gf2System bad{2, {{boost::dynamic_bitset<>(2), true}}};
  EXPECT_EQ(count_solutions(bad), Count(0));
  EXPECT_EQ(count_solutions(Gf2System{70, {}}), pow2(70));
}

TEST(InstanceToSystem, Examples) {
  const auto i = Instance::parse("vars x y z\nconstraint XOR x y\n");
  const auto s = instance_to_system(i);
  EXPECT_EQ(s.num_vars, 3u);
  EXPECT_EQ(s.rows.size(), 1u);
  EXPECT_EQ(count_solutions(s), Count(4));

  const auto folded = instance_to_system(Instance::parse("vars x\nconstraint XOR x x\n"));
  ASSERT_EQ(folded.rows.size(), 1u);
  EXPECT_TRUE(folded.rows[0].coeffs.none());
  EXPECT_TRUE(folded.rows[0].rhs);

  EXPECT_TRUE(instance_to_system(Instance::parse("vars a b\n")).rows.empty());
  EXPECT_THROW(instance_to_system(Instance::parse("vars a b\nconstraint OR a b\n")), PreconditionError);
}

TEST(CountDispatch, Examples) {
  const auto a = count(Instance::parse("vars x y z\nconstraint XOR x y\n"));
  EXPECT_EQ(a.value, Count(4));
  EXPECT_EQ(a.method, CountMethod::Affine);
  const auto b = count(Instance::parse("vars u v\nconstraint NAND u v\n"));
  EXPECT_EQ(b.value, Count(3));
  EXPECT_EQ(b.method, CountMethod::BruteForce);
  const auto c = count(Instance::parse("vars x y z\nconstraint XOR x y\nconstraint NAND y z\n"));
  EXPECT_EQ(c.value, Count(3));
  EXPECT_EQ(c.method, CountMethod::BruteForce);
}

TEST(CountDispatch, LargeAffineInstancesNeedNoEnumeration) {
  std::string text = "vars";
  for (int i = 0; i < 100; ++i) text += " x" + std::to_string(i);
  text += "\n";
  for (int i = 0; i + 1 < 100; i += 2) text += "constraint XOR x" + std::to_string(i) + " x" + std::to_string(i + 1) + "\n";
  EXPECT_EQ(count(Instance::parse(text)).value, pow2(50));
}

TEST(CountDispatch, RandomAffineInstancesMatchOracle) {
  const auto tables = affine_tables(3);
  std::mt19937_64 rng(31);
  ConstraintLanguage lang;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < tables.size(); i += 3) {
    names.push_back("A" + std::to_string(i));
    lang.add(names.back(), tables[i]);
  }
  for (int t = 0; t < 60; ++t) {
    const auto inst = oracle::random_instance(rng, lang, names, 1 + static_cast<int>(rng() % 12),
                                              static_cast<int>(rng() % 6));
    ASSERT_EQ(count_solutions(instance_to_system(inst)), Count(oracle::count(inst)));
  }
}

TEST(Gf2, RankIgnoresRowOrder) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 50; ++t) {
    Gf2System s{8, {}};
    for (int r = 0; r < 6; ++r) {
      boost::dynamic_bitset<> row(8, rng() & 0xff);
      s.rows.push_back({row, static_cast<bool>(rng() & 1u)});
    }
    auto rev = s;
    std::reverse(rev.rows.begin(), rev.rows.end());
    EXPECT_EQ(eliminate(s).rank, eliminate(rev).rank);
    EXPECT_EQ(count_solutions(s), count_solutions(rev));
  }
}
