/*
 * Copyright 2026 The sepax Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <vector>

#include "oracles.hpp"
#include "sepax/lottery.hpp"
#include "sepax/random.hpp"

namespace sepax {
namespace {

Lottery lot(std::vector<Rat> p) { return Lottery(std::move(p)); }
WeakOrder order(const char* text) { return WeakOrder::parse(text); }

TEST(LotteryTest, RejectsInvalidDistributions) {
  EXPECT_THROW(lot({Rat(1, 2), Rat(1, 3)}), InvalidLottery);
  EXPECT_THROW(lot({Rat(3, 2), Rat(-1, 2)}), InvalidLottery);
  EXPECT_THROW(lot({}), InvalidLottery);
  EXPECT_NO_THROW(lot({Rat(1)}));
}

TEST(LotteryTest, SubsetProb) {
  const Lottery x = lot({Rat(1, 2), Rat(1, 3), Rat(1, 6)});
  EXPECT_EQ(subset_prob(x, AltSet{}), Rat(0));
  EXPECT_EQ(subset_prob(x, AltSet::all(3)), Rat(1));
  EXPECT_EQ(subset_prob(x, AltSet{0, 2}), Rat(2, 3));
  EXPECT_THROW(subset_prob(x, AltSet{3}), std::out_of_range);
}

TEST(FosdTest, HandExamples) {
  const WeakOrder r = order("0>1>2");
  const Lottery x = lot({Rat(1, 2), Rat(1, 2), Rat(0)});
  const Lottery y = lot({Rat(1, 2), Rat(0), Rat(1, 2)});
  EXPECT_TRUE(fosd(x, x, r));
  EXPECT_TRUE(fosd(x, y, r));
  EXPECT_FALSE(fosd(y, x, r));
  EXPECT_THROW(fosd(x, lot({Rat(1)}), r), SizeMismatch);
  EXPECT_THROW(fosd(x, y, order("0>1")), SizeMismatch);
}

TEST(FosdTest, UtilityOracleHandExamples) {
  const WeakOrder r = order("0>1");
  const Lottery first = lot({Rat(1), Rat(0)});
  const Lottery second = lot({Rat(0), Rat(1)});
  EXPECT_TRUE(fosd_oracle_utilities(first, first, r));
  EXPECT_TRUE(fosd_oracle_utilities(first, second, r));
  EXPECT_FALSE(fosd_oracle_utilities(second, first, r));
  EXPECT_THROW(fosd_oracle_utilities(first, second, order("0>1>2")), SizeMismatch);
}

TEST(FosdTest, AgreesWithDefinitionAndUtilityOracle) {
  Rng rng(2024);
  for (int t = 0; t < 10000; ++t) {
    const int m = 1 + static_cast<int>(rng.below(5));
    const WeakOrder& r = random_order(m, rng);
    const Lottery x = random_lottery(m, rng, 3);
    const Lottery y = rng.below(4) == 0 ? x : random_lottery(m, rng, 3);
    const bool fast = fosd(x, y, r);
    ASSERT_EQ(fast, fosd_oracle_utilities(x, y, r)) << r.to_string() << x.to_string() << y.to_string();
    ASSERT_EQ(fast, oracle::fosd_by_definition(x, y, r));
  }
}

TEST(FosdTest, ReflexiveAndAntisymmetricOnCumulatives) {
  Rng rng(99);
  for (int t = 0; t < 3000; ++t) {
    const int m = 1 + static_cast<int>(rng.below(5));
    const WeakOrder& r = random_order(m, rng);
    const Lottery x = random_lottery(m, rng, 2);
    const Lottery y = random_lottery(m, rng, 2);
    ASSERT_TRUE(fosd(x, x, r));
    if (fosd(x, y, r) && fosd(y, x, r)) {
      ASSERT_EQ(cumulative_by_class(x, r), cumulative_by_class(y, r));
    }
  }
}

TEST(UtilityTest, Consistency) {
  EXPECT_TRUE(consistent(UtilityFn({Rat(2), Rat(1)}), order("0>1")));
  EXPECT_FALSE(consistent(UtilityFn({Rat(1), Rat(2)}), order("0>1")));
  for (int c : {0, 1, 7}) {
    EXPECT_TRUE(consistent(UtilityFn({Rat(c), Rat(c), Rat(c)}), order("0,1,2")));
  }
  // Weak consistency allows a flat utility across strict classes.
  EXPECT_TRUE(consistent(UtilityFn({Rat(1), Rat(1)}), order("0>1")));
  EXPECT_FALSE(consistent(UtilityFn({Rat(1), Rat(2), Rat(1)}), order("0,1>2")));
  EXPECT_FALSE(consistent(UtilityFn({Rat(1), Rat(1)}), order("0>1>2")));
  EXPECT_THROW(UtilityFn({Rat(-1)}), std::invalid_argument);
}

TEST(UtilityTest, CanonicalUtility) {
  EXPECT_EQ(canonical_utility(order("0>1>2")), UtilityFn({Rat(3), Rat(2), Rat(1)}));
  EXPECT_EQ(canonical_utility(order("0,1,2")), UtilityFn({Rat(1), Rat(1), Rat(1)}));
  EXPECT_EQ(canonical_utility(order("1>0,2")), UtilityFn({Rat(1), Rat(2), Rat(1)}));
  for (int m = 1; m <= 5; ++m) {
    for (const WeakOrder& r : OrderDomain::get(m).orders()) {
      EXPECT_TRUE(consistent(canonical_utility(r), r)) << r.to_string();
    }
  }
}

TEST(UtilityTest, InnerProductOfIndicatorsIsCumulativeDifference) {
  const WeakOrder r = order("1>0,2");
  const Lottery x = lot({Rat(1, 4), Rat(1, 2), Rat(1, 4)});
  const Lottery y = lot({Rat(1, 3), Rat(1, 3), Rat(1, 3)});
  const auto gens = upper_contour_indicators(r);
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(inner_product_diff(gens[0].values(), x, y), Rat(1, 6));
  EXPECT_EQ(inner_product_diff(gens[1].values(), x, y), Rat(0));
}

}  // namespace
}  // namespace sepax
