/*
 * Copyright 2026 The uarank Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "uarank/io.h"

#include <random>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"
#include "uarank/fairness_audit.h"

namespace uarank {
namespace {

using ::testing::HasSubstr;

TEST(PredictionCsvTest, Examples) {
  absl::StatusOr<PredictionMatrix> p = ParsePredictionCsv("1,0\n0,1\n");
  ASSERT_TRUE(p.ok());
  EXPECT_EQ(p->num_individuals(), 2);
  EXPECT_EQ(p->num_labels(), 2);
  EXPECT_EQ(p->prob(0, 0), 1.0);
  EXPECT_EQ(p->prob(1, 1), 1.0);

  absl::StatusOr<PredictionMatrix> lb =
      ParsePredictionCsv("0.5,0,0.5\n0,1,0\n0,1,0\n");
  ASSERT_TRUE(lb.ok());
  EXPECT_EQ(lb->num_individuals(), 3);
  EXPECT_EQ(lb->prob(0, 0), 0.5);
  EXPECT_EQ(lb->prob(0, 2), 0.5);
}

TEST(PredictionCsvTest, HeaderBlankLinesAndCrlf) {
  absl::StatusOr<PredictionMatrix> p =
      ParsePredictionCsv("label_1,label_2\r\n0.25, 0.75\r\n\r\n1,0\r\n");
  ASSERT_TRUE(p.ok()) << p.status();
  EXPECT_EQ(p->num_individuals(), 2);
  EXPECT_EQ(p->prob(0, 1), 0.75);
  ASSERT_TRUE(ParsePredictionCsv("1\n1\n").ok());
}

TEST(PredictionCsvTest, RowSumErrorNamesRowAndSum) {
  absl::StatusOr<PredictionMatrix> p = ParsePredictionCsv("0.5,0.4\n");
  ASSERT_FALSE(p.ok());
  EXPECT_EQ(p.status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_THAT(p.status().message(), HasSubstr("row 1"));
  EXPECT_THAT(p.status().message(), HasSubstr("0.9"));
}

TEST(PredictionCsvTest, ParseErrorReportsLineAndColumn) {
  absl::StatusOr<PredictionMatrix> p = ParsePredictionCsv("1,0\n0,abc\n");
  ASSERT_FALSE(p.ok());
  EXPECT_THAT(p.status().message(), HasSubstr("line 2, column 2"));
  EXPECT_THAT(ParsePredictionCsv("label_1,label_2\n1,0\n0.5,x\n").status().message(),
              HasSubstr("line 3, column 2"));
}

TEST(PredictionCsvTest, RaggedRows) {
  absl::StatusOr<PredictionMatrix> p = ParsePredictionCsv("1,0\n0,0,1\n");
  ASSERT_FALSE(p.ok());
  EXPECT_THAT(p.status().message(), HasSubstr("line 2 has 3 fields, expected 2"));
  EXPECT_FALSE(ParsePredictionCsv("label_1,label_2\n1,0,0\n").ok());
}

TEST(PredictionCsvTest, EmptyInput) {
  EXPECT_FALSE(ParsePredictionCsv("").ok());
  EXPECT_FALSE(ParsePredictionCsv("label_1\n").ok());
}

TEST(PredictionCsvTest, RoundTripIsBitExact) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const PredictionMatrix p = testing::RandomPrediction(
        rng, testing::UniformInt(rng, 1, 10), testing::UniformInt(rng, 1, 5));
    const std::string text = FormatPredictionCsv(p);
    absl::StatusOr<PredictionMatrix> q = ParsePredictionCsv(text);
    ASSERT_TRUE(q.ok()) << q.status();
    EXPECT_TRUE(q->matrix() == p.matrix());
    EXPECT_EQ(FormatPredictionCsv(*q), text);
  }
}

TEST(LoadTest, MissingFile) {
  EXPECT_EQ(LoadPredictionMatrix("/nonexistent/p.csv").status().code(),
            absl::StatusCode::kNotFound);
  EXPECT_EQ(LoadPopulationModel("/nonexistent/m.json").status().code(),
            absl::StatusCode::kNotFound);
}

constexpr char kTwoType[] = R"({
  "labels": 2,
  "types": [
    {"name": "1", "weight": 0.5, "groundTruth": [0.5, 0.5], "predicted": [0.4, 0.6]},
    {"name": "2", "weight": 0.5, "groundTruth": [0.5, 0.5], "predicted": [0.6, 0.4]}
  ],
  "groups": [{"name": "1", "members": ["1"]}, {"name": "2", "members": ["2"]}]
})";

TEST(PopulationJsonTest, TwoTypeModel) {
  absl::StatusOr<PopulationModel> pop = ParsePopulationModel(kTwoType);
  ASSERT_TRUE(pop.ok()) << pop.status();
  EXPECT_EQ(pop->num_types(), 2);
  ASSERT_EQ(pop->num_groups(), 3);
  EXPECT_EQ(pop->group(0).name, "1");
  EXPECT_EQ(pop->group(1).name, "2");
  EXPECT_EQ(pop->group(2).name, "all");
  EXPECT_NEAR(MultiaccuracyAlpha(*pop).alpha, 0.05, 1e-12);
}

TEST(PopulationJsonTest, SingleTypePerfectPredictor) {
  absl::StatusOr<PopulationModel> pop = ParsePopulationModel(R"({
    "labels": 3,
    "types": [{"name": "x", "weight": 1, "groundTruth": [0.2, 0.3, 0.5],
               "predicted": [0.2, 0.3, 0.5]}]
  })");
  ASSERT_TRUE(pop.ok()) << pop.status();
  EXPECT_EQ(pop->num_groups(), 1);
  EXPECT_EQ(MultiaccuracyAlpha(*pop).alpha, 0.0);
}

TEST(PopulationJsonTest, Errors) {
  absl::StatusOr<PopulationModel> weights = ParsePopulationModel(R"({
    "labels": 1,
    "types": [{"name": "a", "weight": 0.6, "groundTruth": [1], "predicted": [1]},
              {"name": "b", "weight": 0.5, "groundTruth": [1], "predicted": [1]}]
  })");
  ASSERT_FALSE(weights.ok());
  EXPECT_THAT(weights.status().message(), HasSubstr("1.1"));

  absl::StatusOr<PopulationModel> member = ParsePopulationModel(R"({
    "labels": 1,
    "types": [{"name": "a", "weight": 1, "groundTruth": [1], "predicted": [1]}],
    "groups": [{"name": "g", "members": ["b"]}]
  })");
  ASSERT_FALSE(member.ok());
  EXPECT_THAT(member.status().message(), HasSubstr("unknown member type 'b'"));

  absl::StatusOr<PopulationModel> dist = ParsePopulationModel(R"({
    "labels": 2,
    "types": [{"name": "a", "weight": 1, "groundTruth": [0.7, 0.7], "predicted": [0.5, 0.5]}]
  })");
  ASSERT_FALSE(dist.ok());
  EXPECT_THAT(dist.status().message(), HasSubstr("groundTruth"));

  EXPECT_FALSE(ParsePopulationModel("{").ok());
  EXPECT_FALSE(ParsePopulationModel(R"({"labels": 2})").ok());
  EXPECT_FALSE(ParsePopulationModel(R"({"labels": "two", "types": []})").ok());
  EXPECT_FALSE(ParsePopulationModel(R"({"labels": 1, "types": [{"name": "a"}]})").ok());
}

TEST(PopulationJsonTest, RoundTrip) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const PopulationModel pop = testing::RandomPopulation(rng, 3, 3);
    const std::string text = FormatPopulationModel(pop);
    absl::StatusOr<PopulationModel> back = ParsePopulationModel(text);
    ASSERT_TRUE(back.ok()) << back.status();
    EXPECT_EQ(FormatPopulationModel(*back), text);
    for (int t = 0; t < pop.num_types(); ++t) {
      EXPECT_EQ(back->type(t).weight, pop.type(t).weight);
      EXPECT_EQ(back->type(t).predicted, pop.type(t).predicted);
    }
  }
}

TEST(NumberListTest, Parses) {
  EXPECT_EQ(*ParseNumberList("1,2,3"), std::vector<double>({1, 2, 3}));
  EXPECT_EQ(*ParseNumberList(" 0.5 0.25\n0.125 "),
            std::vector<double>({0.5, 0.25, 0.125}));
  EXPECT_FALSE(ParseNumberList("1,two").ok());
  EXPECT_FALSE(ParseNumberList("").ok());
}

}  // namespace
}  // namespace uarank
