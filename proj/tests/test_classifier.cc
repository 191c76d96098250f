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

#include <algorithm>
#include <numeric>

#include "oracles.h"
#include "sharpcsp/classifier.h"

using namespace sharpcsp;

namespace {

ConstraintLanguage lang(std::vector<std::pair<std::string, Relation>> rels) {
  ConstraintLanguage l;
  for (auto& [n, r] : rels) l.add(n, r);
  return l;
}

Verdict expected(const std::vector<Relation>& rels) {
  bool all_affine = true;
  bool all_im2 = true;
  for (const auto& r : rels) {
    all_affine = all_affine && oracle::affine(oracle::tuples_of(r));
    all_im2 = all_im2 && oracle::im2(oracle::tuples_of(r));
  }
  if (all_affine) return Verdict::ExactPolyTime;
  return all_im2 ? Verdict::BisEquivalent : Verdict::SatEquivalent;
}

}  // namespace

TEST(Classify, Fixtures) {
  EXPECT_EQ(classify(lang({{"XOR", builtin("XOR")}, {"delta0", builtin("delta0")}, {"delta1", builtin("delta1")}}))
                .verdict,
            Verdict::ExactPolyTime);

  const auto imp = classify(lang({{"IMPLIES", builtin("IMPLIES")}}));
  EXPECT_EQ(imp.verdict, Verdict::BisEquivalent);
  ASSERT_TRUE(imp.affine_evidence);
  EXPECT_EQ(imp.affine_evidence->a.to_string(), "00");
  EXPECT_EQ(imp.affine_evidence->b.to_string(), "01");
  EXPECT_EQ(imp.affine_evidence->c->to_string(), "11");
  EXPECT_EQ(imp.affine_evidence->d.to_string(), "10");
  EXPECT_FALSE(imp.im2_evidence);

  const auto orc = classify(lang({{"OR", builtin("OR")}}));
  EXPECT_EQ(orc.verdict, Verdict::SatEquivalent);
  ASSERT_TRUE(orc.im2_evidence);
  EXPECT_EQ(orc.im2_evidence->result.to_string(), "00");

  const auto both = classify(lang({{"IMPLIES", builtin("IMPLIES")}, {"NAND", builtin("NAND")}}));
  EXPECT_EQ(both.verdict, Verdict::SatEquivalent);
  EXPECT_EQ(*both.affine_relation, "IMPLIES");
  EXPECT_EQ(*both.im2_relation, "NAND");

  const auto fp = classify(lang({{"XOR", builtin("XOR")}}));
  EXPECT_FALSE(fp.affine_evidence);
  EXPECT_FALSE(fp.im2_evidence);

  EXPECT_THROW(classify(ConstraintLanguage{}), PreconditionError);
}

TEST(Classify, SingletonsMatchOracle) {
  for (int k = 1; k <= 3; ++k) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (1 << k)); ++mask) {
      const auto r = oracle::relation_from_mask(k, mask);
      ASSERT_EQ(classify(lang({{"R", r}})).verdict, expected({r})) << r.to_string();
    }
  }
}

TEST(Classify, RandomPairsMatchOracle) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto a = oracle::relation_from_mask(2, rng() & 0xf);
    const auto b = oracle::relation_from_mask(3, rng() & 0xff);
    ASSERT_EQ(classify(lang({{"A", a}, {"B", b}})).verdict, expected({a, b}));
  }
}

TEST(Classify, Monotonicity) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    const auto r = oracle::relation_from_mask(3, rng() & 0xff);
    const auto base = classify(lang({{"R", r}})).verdict;
    // delta0 is affine and in IM2
    EXPECT_EQ(classify(lang({{"R", r}, {"delta0", builtin("delta0")}})).verdict, base);
    // a non-affine addition never moves toward FP
    const auto with = classify(lang({{"R", r}, {"IMPLIES", builtin("IMPLIES")}})).verdict;
    EXPECT_NE(with, Verdict::ExactPolyTime);
    EXPECT_GE(static_cast<int>(with), static_cast<int>(base));
  }
}

TEST(Classify, PermutationInvariant) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto r = oracle::relation_from_mask(4, rng() & 0xffff);
    std::vector<int> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(classify(lang({{"R", r}})).verdict, classify(lang({{"R", r.permuted(perm)}})).verdict);
  }
}
