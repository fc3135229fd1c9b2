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

// Stability, utility and individual-fairness measurements for ranking
// functions. Norms are entrywise: ||M||_1 = sum |M_ij|, ||M||_inf = max |M_ij|.

#ifndef UARANK_METRICS_H_
#define UARANK_METRICS_H_

#include <optional>

#include "absl/status/statusor.h"
#include "uarank/ranking_function.h"
#include "uarank/types.h"

namespace uarank {

struct StabilityReport {
  double inf_gap = 0.0;  // ||r(P) - r(P')||_inf
  double l1_dist = 0.0;  // ||P - P'||_1
  // inf_gap / l1_dist; unset when l1_dist == 0.
  std::optional<double> ratio;
};

StabilityReport MakeStabilityReport(const RankingDistribution& a,
                                    const RankingDistribution& b,
                                    const PredictionMatrix& p,
                                    const PredictionMatrix& p_prime);

// Evaluates the ranking function on both matrices and compares.
absl::StatusOr<StabilityReport> StabilityGap(
    const RankingFunctionParams& params, const PredictionMatrix& p,
    const PredictionMatrix& p_prime);

// U(P, M) = sum_i sum_k M_ik * w_k * tau(p_i). Linear in M.
absl::StatusOr<double> Utility(const PredictionMatrix& p,
                               const RankingDistribution& m,
                               const UtilitySpec& u);

struct UtilityReport {
  double raw = 0.0;         // U(P, r)
  double min = 0.0;         // U(P, r_min)
  double max = 0.0;         // U(P, r_opt)
  double normalized = 1.0;  // (raw - min) / (max - min), in [0, 1]
};

// Normalization denominators below this count as "every ranking is optimal".
inline constexpr double kDegenerateUtilityRange = 1e-12;

// Normalized utility of an explicit ranking distribution.
absl::StatusOr<UtilityReport> NormalizedUtilityOf(const PredictionMatrix& p,
                                                  const RankingDistribution& m,
                                                  const UtilitySpec& u);

// Normalized utility of a ranking function. The function's class utility
// map defaults to u.tau() when params.tau is unset.
absl::StatusOr<UtilityReport> NormalizedUtility(
    const PredictionMatrix& p, const RankingFunctionParams& params,
    const UtilitySpec& u);

struct IfCompositionResult {
  double row_gap = 0.0;  // ||M_i - M_j||_inf
  double bound = 0.0;    // 2 * beta * gamma * d_ij
  bool passed = false;
};

// Compares the rank distributions of individuals i and j against the bound
// implied by a (beta, d)-individually fair predictor composed with an
// anonymous gamma-stable ranking function.
absl::StatusOr<IfCompositionResult> IfCompositionCheck(
    const PredictionMatrix& p, const RankingDistribution& m, int i, int j,
    double distance, double beta, double gamma);

}  // namespace uarank

#endif  // UARANK_METRICS_H_
