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

#include "uarank/rank_core.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "test_util.h"
#include "uarank/ranking_function.h"

namespace uarank {
namespace {

using ::uarank::testing::BruteForceUa;
using ::uarank::testing::MaxAbsDiff;
using ::uarank::testing::MaxMarginalError;
using ::uarank::testing::RandomPrediction;

PredictionMatrix Make(const std::vector<std::vector<double>>& rows) {
  absl::StatusOr<PredictionMatrix> p = PredictionMatrix::Create(rows);
  EXPECT_TRUE(p.ok()) << p.status();
  return *p;
}

PredictionMatrix StabLb() {
  return Make({{0.5, 0, 0.5}, {0, 1, 0}, {0, 1, 0}});
}

void ExpectMatrixNear(const Matrix& got,
                      const std::vector<std::vector<double>>& want,
                      double tol) {
  ASSERT_EQ(got.rows(), static_cast<int>(want.size()));
  for (int i = 0; i < got.rows(); ++i) {
    ASSERT_EQ(got.cols(), static_cast<int>(want[i].size()));
    for (int k = 0; k < got.cols(); ++k) {
      EXPECT_NEAR(got(i, k), want[i][k], tol) << "entry (" << i << "," << k << ")";
    }
  }
}

TEST(PredictionMatrixTest, RejectsBadRows) {
  EXPECT_FALSE(PredictionMatrix::Create({{0.5, 0.4}}).ok());
  EXPECT_FALSE(PredictionMatrix::Create({{1.2, -0.2}}).ok());
  EXPECT_FALSE(PredictionMatrix::Create({{1.0}, {0.5, 0.5}}).ok());
  EXPECT_FALSE(PredictionMatrix::Create(std::vector<std::vector<double>>{}).ok());
}

TEST(PredictionMatrixTest, RenormalizesWithinTolerance) {
  PredictionMatrix p = Make({{0.5 + 4e-7, 0.5}});
  EXPECT_NEAR(p.prob(0, 0) + p.prob(0, 1), 1.0, 1e-15);
  PredictionMatrix q = Make({{0.25, 0.75}});
  EXPECT_EQ(q.prob(0, 0), 0.25);
}

TEST(UaRankTest, FullTieIsUniform) {
  ExpectMatrixNear(UaRank(Make({{1, 0}, {1, 0}})).matrix(),
                   {{0.5, 0.5}, {0.5, 0.5}}, 1e-15);
}

TEST(UaRankTest, AntiDiagonalGivesIdentity) {
  ExpectMatrixNear(UaRank(Make({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})).matrix(),
                   {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 1e-15);
}

TEST(UaRankTest, StabilityLowerBoundInstance) {
  ExpectMatrixNear(UaRank(StabLb()).matrix(),
                   {{0.5, 0, 0.5}, {0.25, 0.5, 0.25}, {0.25, 0.5, 0.25}},
                   1e-15);
}

TEST(UaRankTest, SingleIndividual) {
  ExpectMatrixNear(UaRank(Make({{0.3, 0.7}})).matrix(), {{1}}, 0);
  ExpectMatrixNear(UaRankOracle(Make({{0.3, 0.7}}))->matrix(), {{1}}, 0);
}

TEST(UaRankConditionalTest, Examples) {
  for (int l = 0; l < 2; ++l) {
    absl::StatusOr<std::vector<double>> c =
        UaRankConditional(Make({{0.4, 0.6}}), 0, l);
    ASSERT_TRUE(c.ok());
    EXPECT_EQ(*c, std::vector<double>({1.0}));
  }
  absl::StatusOr<std::vector<double>> top = UaRankConditional(StabLb(), 0, 2);
  ASSERT_TRUE(top.ok());
  EXPECT_EQ(*top, std::vector<double>({1, 0, 0}));
  absl::StatusOr<std::vector<double>> bottom =
      UaRankConditional(StabLb(), 0, 0);
  ASSERT_TRUE(bottom.ok());
  EXPECT_EQ(*bottom, std::vector<double>({0, 0, 1}));
}

TEST(UaRankConditionalTest, OutOfRange) {
  EXPECT_EQ(UaRankConditional(StabLb(), 3, 0).status().code(),
            absl::StatusCode::kOutOfRange);
  EXPECT_EQ(UaRankConditional(StabLb(), 0, 3).status().code(),
            absl::StatusCode::kOutOfRange);
  EXPECT_EQ(UaRankConditional(StabLb(), -1, 0).status().code(),
            absl::StatusCode::kOutOfRange);
}

TEST(UaRankConditionalTest, AssemblesToUaRank) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = testing::UniformInt(rng, 1, 9);
    const int L = testing::UniformInt(rng, 1, 5);
    PredictionMatrix p = RandomPrediction(rng, n, L);
    RankingDistribution m = UaRank(p);
    for (int i = 0; i < n; ++i) {
      std::vector<double> assembled(n, 0.0);
      for (int l = 0; l < L; ++l) {
        absl::StatusOr<std::vector<double>> c = UaRankConditional(p, i, l);
        ASSERT_TRUE(c.ok());
        double total = 0.0;
        for (int k = 0; k < n; ++k) {
          assembled[k] += p.prob(i, l) * (*c)[k];
          total += (*c)[k];
        }
        EXPECT_NEAR(total, 1.0, 1e-9);
      }
      for (int k = 0; k < n; ++k) EXPECT_NEAR(m(i, k), assembled[k], 1e-12);
    }
  }
}

TEST(LabelCountTableTest, MatchesDirectEnumeration) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = testing::UniformInt(rng, 1, 5);
    const int L = testing::UniformInt(rng, 1, 4);
    PredictionMatrix p = RandomPrediction(rng, n, L);
    const int excluded = testing::UniformInt(rng, 0, n - 1);
    const int label = testing::UniformInt(rng, 0, L - 1);
    absl::StatusOr<LabelCountTable> table =
        BuildLabelCountTable(p, excluded, label);
    ASSERT_TRUE(table.ok());
    EXPECT_EQ(table->at(0, 0, 0), 1.0);
    EXPECT_EQ(table->at(0, -1, 0), 0.0);
    std::vector<int> others;
    for (int i = 0; i < n; ++i) {
      if (i != excluded) others.push_back(i);
    }
    for (int t = 0; t <= n - 1; ++t) {
      EXPECT_NEAR(table->SliceTotal(t), 1.0, 1e-9);
      // Direct sum over label assignments of the first t others.
      std::vector<double> want(static_cast<size_t>(n) * n, 0.0);
      std::vector<int> lab(t, 0);
      while (true) {
        double w = 1.0;
        int j = 0, jp = 0;
        for (int s = 0; s < t; ++s) {
          w *= p.prob(others[s], lab[s]);
          j += lab[s] == label;
          jp += lab[s] > label;
        }
        want[static_cast<size_t>(j) * n + jp] += w;
        int pos = 0;
        while (pos < t && ++lab[pos] == L) lab[pos++] = 0;
        if (pos == t) break;
      }
      for (int j = 0; j < n; ++j) {
        for (int jp = 0; jp < n; ++jp) {
          EXPECT_NEAR(table->at(t, j, jp), want[static_cast<size_t>(j) * n + jp],
                      1e-12);
        }
      }
    }
  }
}

TEST(UaRankOracleTest, Examples) {
  ExpectMatrixNear(UaRankOracle(Make({{0, 1}, {1, 0}}))->matrix(),
                   {{1, 0}, {0, 1}}, 0);
}

TEST(UaRankOracleTest, RefusesOverBudget) {
  std::mt19937_64 rng(1);
  PredictionMatrix p = RandomPrediction(rng, 21, 2);
  EXPECT_EQ(UaRankOracle(p).status().code(),
            absl::StatusCode::kResourceExhausted);
  EXPECT_EQ(UaRankOracle(RandomPrediction(rng, 5, 3), {.max_label_vectors = 100})
                .status()
                .code(),
            absl::StatusCode::kResourceExhausted);
}

TEST(UaRankOracleTest, AgreesWithDpAndIndependentEnumeration) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = testing::UniformInt(rng, 1, 5);
    const int L = testing::UniformInt(rng, 1, 4);
    PredictionMatrix p = RandomPrediction(rng, n, L);
    absl::StatusOr<RankingDistribution> oracle = UaRankOracle(p);
    ASSERT_TRUE(oracle.ok());
    const Matrix dp = UaRank(p).matrix();
    EXPECT_LE(MaxAbsDiff(dp, oracle->matrix()), 1e-9);
    EXPECT_LE(MaxAbsDiff(dp, BruteForceUa(p)), 1e-9);
  }
}

TEST(UaRankTest, DoublyStochastic) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = testing::UniformInt(rng, 1, 30);
    const int L = testing::UniformInt(rng, 1, 5);
    EXPECT_LE(MaxMarginalError(UaRank(RandomPrediction(rng, n, L)).matrix()),
              1e-9);
  }
}

TEST(UaRankTest, Anonymous) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = testing::UniformInt(rng, 1, 12);
    const int L = testing::UniformInt(rng, 1, 4);
    PredictionMatrix p = RandomPrediction(rng, n, L);
    const std::vector<int> perm = testing::RandomPermutation(rng, n);
    const RankingDistribution base = UaRank(p);
    const RankingDistribution permuted = UaRank(p.PermuteRows(perm));
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        EXPECT_NEAR(permuted(i, k), base(perm[i], k), 1e-12);
      }
    }
  }
}

TEST(UaRankTest, ZeroColumnExtension) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = testing::UniformInt(rng, 1, 12);
    const int L = testing::UniformInt(rng, 1, 4);
    PredictionMatrix p = RandomPrediction(rng, n, L);
    EXPECT_LE(MaxAbsDiff(UaRank(p).matrix(), UaRank(p.AppendZeroLabel()).matrix()),
              1e-12);
  }
}

TEST(UaRankTest, ThreadCountDoesNotChangeOutput) {
  std::mt19937_64 rng(8);
  PredictionMatrix p = RandomPrediction(rng, 25, 4);
  const RankingDistribution one = UaRank(p, {.num_threads = 1});
  for (int threads : {2, 3, 8}) {
    EXPECT_TRUE(one.matrix() == UaRank(p, {.num_threads = threads}).matrix());
  }
}

TEST(OptRankTest, Examples) {
  const ClassUtilityMap v = *ClassUtilityMap::Create({1, 2});
  ExpectMatrixNear(OptRank(Make({{0.6, 0.4}, {0.4, 0.6}}), v)->matrix(),
                   {{0, 1}, {1, 0}}, 0);
  ExpectMatrixNear(OptRank(Make({{0.3, 0.7}, {0.3, 0.7}, {0.3, 0.7}}), v)
                       ->matrix(),
                   {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 0);
  ExpectMatrixNear(
      OptRank(StabLb(), *ClassUtilityMap::Create({1, 2, 3}))->matrix(),
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 0);
  EXPECT_FALSE(OptRank(StabLb(), v).ok());
}

TEST(MinRankTest, ReversesOrder) {
  const ClassUtilityMap v = *ClassUtilityMap::Create({1, 2});
  // tau = (1.9, 1.4, 1.6).
  ExpectMatrixNear(MinRank(Make({{0.1, 0.9}, {0.6, 0.4}, {0.4, 0.6}}), v)
                       ->matrix(),
                   {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, 0);
}

TEST(MixRankTest, Examples) {
  const ClassUtilityMap v = *ClassUtilityMap::Create({1, 2, 3});
  const PredictionMatrix p = StabLb();
  EXPECT_TRUE(MixRank(p, v, 1.0)->matrix() == UaRank(p).matrix());
  EXPECT_TRUE(MixRank(p, v, 0.0)->matrix() == OptRank(p, v)->matrix());
  EXPECT_NEAR((*MixRank(p, v, 0.5))(0, 0), 0.75, 1e-15);
  EXPECT_FALSE(MixRank(p, v, 1.5).ok());
  EXPECT_FALSE(MixRank(p, v, -0.1).ok());
}

TEST(PlRankTest, EqualScoresAreSymmetric) {
  const ClassUtilityMap v = *ClassUtilityMap::Create({1, 2});
  absl::StatusOr<RankingDistribution> m =
      PlRank(Make({{0.5, 0.5}, {0.5, 0.5}}), v, {.samples = 100000, .seed = 1});
  ASSERT_TRUE(m.ok());
  for (double x : m->matrix().data()) EXPECT_NEAR(x, 0.5, 0.01);
}

TEST(PlRankTest, SoftmaxForTwoIndividuals) {
  // tau = v . p with v = (0, ln 2): tau_1 - tau_2 = ln 2.
  const ClassUtilityMap v = *ClassUtilityMap::Create({0, std::log(2.0)});
  const PredictionMatrix p = Make({{0, 1}, {1, 0}});
  absl::StatusOr<RankingDistribution> sampled =
      PlRank(p, v, {.samples = 100000, .seed = 9});
  ASSERT_TRUE(sampled.ok());
  EXPECT_NEAR((*sampled)(0, 0), 2.0 / 3.0, 0.01);
  absl::StatusOr<RankingDistribution> exact = PlRankExact(p, v);
  ASSERT_TRUE(exact.ok());
  EXPECT_NEAR((*exact)(0, 0), 2.0 / 3.0, 1e-15);
  ExpectMatrixNear(PlRankExact(Make({{0.5, 0.5}, {0.5, 0.5}}), v)->matrix(),
                   {{0.5, 0.5}, {0.5, 0.5}}, 1e-15);
}

TEST(PlRankTest, SingleIndividual) {
  const ClassUtilityMap v = ClassUtilityMap::Linear(2);
  ExpectMatrixNear(PlRank(Make({{0.2, 0.8}}), v, {.samples = 10})->matrix(),
                   {{1}}, 0);
}

TEST(PlRankExactTest, FirstAndLastPositionsClosedForm) {
  // Top position is softmax(tau); the bottom position of i is
  // sum over orders of the other two.
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const ClassUtilityMap v = *ClassUtilityMap::Create({0, 1, 3});
    PredictionMatrix p = RandomPrediction(rng, 3, 3);
    const std::vector<double> tau = v.Scores(p);
    double z = 0.0;
    for (double t : tau) z += std::exp(t);
    absl::StatusOr<RankingDistribution> m = PlRankExact(p, v);
    ASSERT_TRUE(m.ok());
    for (int i = 0; i < 3; ++i) {
      EXPECT_NEAR((*m)(i, 0), std::exp(tau[i]) / z, 1e-12);
      double last = 0.0;
      for (int a = 0; a < 3; ++a) {
        if (a == i) continue;
        const int b = 3 - a - i;
        last += std::exp(tau[a]) / z * std::exp(tau[b]) /
                (std::exp(tau[b]) + std::exp(tau[i]));
      }
      EXPECT_NEAR((*m)(i, 2), last, 1e-12);
    }
  }
}

TEST(PlRankExactTest, RefusesLargeN) {
  std::mt19937_64 rng(1);
  EXPECT_EQ(PlRankExact(RandomPrediction(rng, 9, 2), ClassUtilityMap::Linear(2))
                .status()
                .code(),
            absl::StatusCode::kResourceExhausted);
}

TEST(PlRankTest, MatchesExactAndIsReproducible) {
  std::mt19937_64 rng(13);
  const ClassUtilityMap v = ClassUtilityMap::Linear(3);
  PredictionMatrix p = RandomPrediction(rng, 3, 3);
  const PlOptions opts{.samples = 1'000'000, .seed = 77, .num_threads = 1};
  absl::StatusOr<RankingDistribution> a = PlRank(p, v, opts);
  ASSERT_TRUE(a.ok());
  EXPECT_LE(MaxAbsDiff(a->matrix(), PlRankExact(p, v)->matrix()), 0.005);
  PlOptions threaded = opts;
  threaded.num_threads = 4;
  EXPECT_TRUE(a->matrix() == PlRank(p, v, threaded)->matrix());
  PlOptions reseeded = opts;
  reseeded.seed = 78;
  EXPECT_FALSE(a->matrix() == PlRank(p, v, reseeded)->matrix());
}

TEST(PlRankTest, RejectsZeroSamples) {
  EXPECT_FALSE(PlRank(StabLb(), ClassUtilityMap::Linear(3), {.samples = 0}).ok());
}

TEST(RankingFunctionTest, AllAreDoublyStochastic) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = testing::UniformInt(rng, 1, 30);
    const int L = testing::UniformInt(rng, 1, 5);
    PredictionMatrix p = RandomPrediction(rng, n, L);
    for (RankingFunctionId id : {RankingFunctionId::kUa, RankingFunctionId::kOpt,
                                 RankingFunctionId::kMix, RankingFunctionId::kPl}) {
      RankingFunctionParams params;
      params.id = id;
      params.phi = testing::Uniform(rng);
      params.samples = 2000;
      params.seed = trial;
      absl::StatusOr<RankingDistribution> m = ApplyRankingFunction(params, p);
      ASSERT_TRUE(m.ok()) << m.status();
      EXPECT_LE(MaxMarginalError(m->matrix()), 1e-9)
          << RankingFunctionName(id);
    }
  }
}

TEST(RankingFunctionTest, ParsesNames) {
  EXPECT_EQ(*ParseRankingFunctionId("mix"), RankingFunctionId::kMix);
  EXPECT_FALSE(ParseRankingFunctionId("best").ok());
  EXPECT_EQ(RankingFunctionName(RankingFunctionId::kPl), "pl");
}

}  // namespace
}  // namespace uarank
