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

// Ranking functions: maps from prediction matrices to rank-marginal matrices.
//
// The uncertainty-aware (UA) ranking draws every individual's label
// independently from its row of the prediction matrix, sorts by label (higher
// labels first) and breaks ties uniformly at random. UaRank computes its rank
// marginals exactly in O(n^4 + n^3 L) time: for each individual i and label l
// it runs a two-dimensional Poisson-binomial style dynamic program over the
// other n-1 individuals, counting how many share label l and how many beat
// it, and then reads off the probability of each rank block.

#ifndef UARANK_RANK_CORE_H_
#define UARANK_RANK_CORE_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "uarank/types.h"

namespace uarank {

// Joint count distribution over individuals other than `excluded`.
// at(t, j, jp) = Pr[among the first t non-excluded individuals (in index
// order), exactly j have label `label` and exactly jp have a label above it].
struct LabelCountTable {
  int excluded = 0;
  int label = 0;
  int dim = 0;  // n; t, j and jp all range over [0, n-1].
  std::vector<double> values;

  double at(int t, int j, int jp) const {
    if (j < 0 || jp < 0) return 0.0;
    return values[(static_cast<size_t>(t) * dim + j) * dim + jp];
  }
  // Sum over (j, jp) of slice t.
  double SliceTotal(int t) const;
};

// Materializes the full O(n^3) table. UaRank keeps only two rolling slices;
// this is for inspection and tests.
absl::StatusOr<LabelCountTable> BuildLabelCountTable(const PredictionMatrix& p,
                                                     int excluded, int label);

// Pr[individual -> rank k | label_individual = label] for k = 0..n-1.
absl::StatusOr<std::vector<double>> UaRankConditional(
    const PredictionMatrix& p, int individual, int label);

struct UaRankOptions {
  // The (individual, label) dynamic programs are independent and may run
  // concurrently. Results are bit-identical for any thread count.
  int num_threads = 1;
};

// Exact UA rank marginals.
RankingDistribution UaRank(const PredictionMatrix& p,
                           const UaRankOptions& options = {});

struct OracleOptions {
  int64_t max_label_vectors = 1'000'000;
};

// Brute-force UA marginals by enumerating all L^n label vectors. Refuses with
// kResourceExhausted when L^n exceeds the budget.
absl::StatusOr<RankingDistribution> UaRankOracle(
    const PredictionMatrix& p, const OracleOptions& options = {});

// Deterministic ranking by decreasing tau(p_i); ties go to the lower index.
absl::StatusOr<RankingDistribution> OptRank(const PredictionMatrix& p,
                                            const ClassUtilityMap& tau);

// Worst-utility ranking: increasing tau(p_i), ties to the lower index.
absl::StatusOr<RankingDistribution> MinRank(const PredictionMatrix& p,
                                            const ClassUtilityMap& tau);

// phi * UaRank(p) + (1 - phi) * OptRank(p, tau), phi in [0, 1].
absl::StatusOr<RankingDistribution> MixRank(const PredictionMatrix& p,
                                            const ClassUtilityMap& tau,
                                            double phi,
                                            const UaRankOptions& options = {});

struct PlOptions {
  int64_t samples = 100'000;
  uint64_t seed = 0;
  int num_threads = 1;
};

// Plackett-Luce marginals with scores tau(p_i), estimated by averaging
// `samples` rankings drawn with the Gumbel trick: sort by tau(p_i) + g_i with
// g_i iid standard Gumbel. Deterministic for a fixed seed, independent of
// the thread count.
absl::StatusOr<RankingDistribution> PlRank(const PredictionMatrix& p,
                                           const ClassUtilityMap& tau,
                                           const PlOptions& options);

inline constexpr int kPlExactMaxIndividuals = 8;

// Exact Plackett-Luce marginals by summing over all n! sequential-softmax
// orderings. Refuses with kResourceExhausted when n > 8.
absl::StatusOr<RankingDistribution> PlRankExact(const PredictionMatrix& p,
                                                const ClassUtilityMap& tau);

}  // namespace uarank

#endif  // UARANK_RANK_CORE_H_
