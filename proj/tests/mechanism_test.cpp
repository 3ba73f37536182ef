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

#include <filesystem>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sepax/json_io.hpp"
#include "specimens.hpp"

namespace sepax {
namespace {

WeakOrder order(const char* text) { return WeakOrder::parse(text); }
Lottery lot(std::vector<Rat> p) { return Lottery(std::move(p)); }

TEST(Zoo, Names) {
  EXPECT_EQ(zoo::kNames.size(), 5u);
  for (auto name : zoo::kNames) EXPECT_EQ(zoo::make(name, 3).name(), std::string(name) + "(3)");
  EXPECT_THROW(zoo::make("nope", 3), std::invalid_argument);
}

TEST(Zoo, Totality) {
  const auto fubini = oracle::fubini_recurrence(5);
  for (int m = 1; m <= 5; ++m) {
    for (auto name : zoo::kNames) EXPECT_EQ(zoo::make(name, m).size(), fubini[m]) << name;
  }
}

TEST(Zoo, HandEntries) {
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(zoo::uniform_lottery(2).at(i), lot({Rat(1, 2), Rat(1, 2)}));
  EXPECT_EQ(zoo::top_class_uniform(3)(order("0,1>2")), lot({Rat(1, 2), Rat(1, 2), Rat(0)}));
  EXPECT_EQ(zoo::min_top_dictator(3)(order("1,2>0")), Lottery::unit(3, 1));
  EXPECT_TRUE(zoo::min_top_dictator(3).is_deterministic());
  EXPECT_FALSE(zoo::top_class_uniform(3).is_deterministic());
  EXPECT_EQ(zoo::rank_score(3)(order("0>1>2")), lot({Rat(1, 2), Rat(1, 3), Rat(1, 6)}));
  EXPECT_EQ(zoo::rank_score(3)(order("0,1>2")), lot({Rat(5, 12), Rat(5, 12), Rat(1, 6)}));
  const auto ksb = zoo::k_sensitive_boost(3);
  EXPECT_EQ(ksb(order("0,1,2")), lot({Rat(1, 3), Rat(1, 3), Rat(1, 3)}));
  EXPECT_EQ(ksb(order("0,1>2")), lot({Rat(1, 3), Rat(1, 3), Rat(1, 3)}));
  EXPECT_EQ(ksb(order("0>1,2")), lot({Rat(2, 3), Rat(1, 6), Rat(1, 6)}));
  EXPECT_EQ(ksb(order("0>1>2")), lot({Rat(3, 4), Rat(1, 8), Rat(1, 8)}));
}

TEST(Table, FromPairsEnforcesTotality) {
  std::vector<std::pair<WeakOrder, Lottery>> pairs;
  for (const auto& r : OrderDomain::get(2).orders()) pairs.emplace_back(r, Lottery::unit(2, 0));
  EXPECT_EQ(MechanismTable::from_pairs(2, pairs, "c"), zoo::constant_choice(2, 0));

  auto missing = pairs;
  missing.pop_back();
  try {
    MechanismTable::from_pairs(2, missing, "c");
    FAIL() << "expected TotalityError";
  } catch (const TotalityError& e) {
    EXPECT_EQ(e.order(), pairs.back().first.to_string());
  }
  auto dup = pairs;
  dup.push_back(pairs.front());
  EXPECT_THROW(MechanismTable::from_pairs(2, dup, "c"), TotalityError);
  EXPECT_THROW(MechanismTable(2, {Lottery::unit(2, 0)}, "short"), std::invalid_argument);
  EXPECT_THROW(MechanismTable(2, {Lottery::unit(3, 0), Lottery::unit(3, 0), Lottery::unit(3, 0)}, "wide"),
               std::invalid_argument);
}

class JsonFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("sepax_mech_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(JsonFiles, RoundTripIsBitExact) {
  Rng rng(8);
  std::vector<MechanismTable> mechs;
  for (auto name : zoo::kNames) mechs.push_back(zoo::make(name, 3));
  for (int t = 0; t < 5; ++t) mechs.push_back(random_mechanism(4, rng));
  for (const auto& mech : mechs) {
    const auto path = dir_ / "mech.json";
    save_mechanism(mech, path);
    const std::string first = read_file(path);
    const MechanismTable back = load_mechanism(path);
    EXPECT_EQ(back, mech);
    save_mechanism(back, path);
    EXPECT_EQ(read_file(path), first);
    EXPECT_FALSE(std::filesystem::exists(dir_ / "mech.json.tmp"));
  }
}

MechanismFormatError::Kind kind_of(const std::string& text) {
  try {
    mechanism_from_string(text);
  } catch (const MechanismFormatError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return MechanismFormatError::Kind::syntax;
}

std::string message_of(const std::string& text) {
  try {
    mechanism_from_string(text);
  } catch (const MechanismFormatError& e) {
    return e.what();
  }
  return {};
}

Json uniform3() { return mechanism_to_json(zoo::uniform_lottery(3)); }

TEST(JsonErrors, EachKind) {
  using Kind = MechanismFormatError::Kind;
  EXPECT_EQ(kind_of("{not json"), Kind::syntax);
  EXPECT_EQ(kind_of(R"({"m": 3})"), Kind::schema);
  EXPECT_EQ(kind_of(R"({"m": 3, "entries": [{"order": "0>1>2"}]})"), Kind::schema);

  Json bad_order = uniform3();
  bad_order["entries"][0]["order"] = "0>1>3";
  EXPECT_EQ(kind_of(bad_order.dump()), Kind::bad_order);

  Json bad_rational = uniform3();
  bad_rational["entries"][0]["lottery"][0] = "1/0";
  EXPECT_EQ(kind_of(bad_rational.dump()), Kind::malformed_rational);
  bad_rational["entries"][0]["lottery"][0] = 0.5;
  EXPECT_EQ(kind_of(bad_rational.dump()), Kind::malformed_rational);

  Json over = uniform3();
  over["entries"][0]["lottery"][0] = "1/2";
  EXPECT_EQ(kind_of(over.dump()), Kind::bad_lottery);
  EXPECT_NE(message_of(over.dump()).find("entry 0"), std::string::npos);
  Json short_lottery = uniform3();
  short_lottery["entries"][1]["lottery"].erase(0);
  EXPECT_EQ(kind_of(short_lottery.dump()), Kind::bad_lottery);

  Json dup = uniform3();
  dup["entries"][1]["order"] = dup["entries"][0]["order"];
  EXPECT_EQ(kind_of(dup.dump()), Kind::duplicate_order);

  Json missing = uniform3();
  for (std::size_t i = 0; i < missing["entries"].size(); ++i) {
    if (missing["entries"][i]["order"] == "0,1,2") {
      missing["entries"].erase(i);
      break;
    }
  }
  EXPECT_EQ(kind_of(missing.dump()), Kind::missing_order);
  EXPECT_NE(message_of(missing.dump()).find("0,1,2"), std::string::npos);
}

TEST(JsonErrors, SumSevenSixths) {
  Json doc = uniform3();
  doc["entries"][2]["lottery"] = Json::array({"1/2", "1/3", "1/3"});
  EXPECT_EQ(kind_of(doc.dump()), MechanismFormatError::Kind::bad_lottery);
}

TEST(JsonErrors, EntriesInAnyOrder) {
  Json doc = mechanism_to_json(zoo::rank_score(3));
  Json reversed = Json::array();
  for (auto it = doc["entries"].rbegin(); it != doc["entries"].rend(); ++it) reversed.push_back(*it);
  doc["entries"] = reversed;
  EXPECT_EQ(mechanism_from_string(doc.dump()), zoo::rank_score(3));
}

}  // namespace
}  // namespace sepax
