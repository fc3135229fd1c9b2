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

#include "uarank/metrics.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "uarank/rank_core.h"

namespace uarank {

StabilityReport MakeStabilityReport(const RankingDistribution& a,
                                    const RankingDistribution& b,
                                    const PredictionMatrix& p,
                                    const PredictionMatrix& p_prime) {
  StabilityReport report;
  report.inf_gap = InfNormDistance(a.matrix(), b.matrix());
  report.l1_dist = L1Distance(p.matrix(), p_prime.matrix());
  if (report.l1_dist > 0.0) report.ratio = report.inf_gap / report.l1_dist;
  return report;
}

absl::StatusOr<StabilityReport> StabilityGap(
    const RankingFunctionParams& params, const PredictionMatrix& p,
    const PredictionMatrix& p_prime) {
  if (p.num_individuals() != p_prime.num_individuals() ||
      p.num_labels() != p_prime.num_labels()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "prediction matrices differ in shape: %dx%d vs %dx%d",
        p.num_individuals(), p.num_labels(), p_prime.num_individuals(),
        p_prime.num_labels()));
  }
  absl::StatusOr<RankingDistribution> a = ApplyRankingFunction(params, p);
  if (!a.ok()) return a.status();
  absl::StatusOr<RankingDistribution> b = ApplyRankingFunction(params, p_prime);
  if (!b.ok()) return b.status();
  return MakeStabilityReport(*a, *b, p, p_prime);
}

absl::StatusOr<double> Utility(const PredictionMatrix& p,
                               const RankingDistribution& m,
                               const UtilitySpec& u) {
  const int n = p.num_individuals();
  if (m.size() != n) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "ranking has %d individuals, predictions have %d", m.size(), n));
  }
  if (static_cast<int>(u.position_weights().size()) != n) {
    return absl::InvalidArgumentError(
        absl::StrFormat("utility has %d position weights, need %d",
                        u.position_weights().size(), n));
  }
  if (u.tau().num_labels() != p.num_labels()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "utility map has %d label values but predictions have %d labels",
        u.tau().num_labels(), p.num_labels()));
  }
  const std::vector<double>& w = u.position_weights();
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    double exposure = 0.0;
    for (int k = 0; k < n; ++k) exposure += m(i, k) * w[k];
    total += exposure * u.tau().Score(p.row(i));
  }
  return total;
}

absl::StatusOr<UtilityReport> NormalizedUtilityOf(const PredictionMatrix& p,
                                                  const RankingDistribution& m,
                                                  const UtilitySpec& u) {
  UtilityReport report;
  absl::StatusOr<double> raw = Utility(p, m, u);
  if (!raw.ok()) return raw.status();
  absl::StatusOr<RankingDistribution> lo = MinRank(p, u.tau());
  if (!lo.ok()) return lo.status();
  absl::StatusOr<RankingDistribution> hi = OptRank(p, u.tau());
  if (!hi.ok()) return hi.status();
  report.raw = *raw;
  report.min = *Utility(p, *lo, u);
  report.max = *Utility(p, *hi, u);
  const double range = report.max - report.min;
  if (range < kDegenerateUtilityRange) {
    report.normalized = 1.0;
  } else {
    report.normalized =
        std::clamp((report.raw - report.min) / range, 0.0, 1.0);
  }
  return report;
}

absl::StatusOr<UtilityReport> NormalizedUtility(
    const PredictionMatrix& p, const RankingFunctionParams& params,
    const UtilitySpec& u) {
  RankingFunctionParams effective = params;
  if (!effective.tau.has_value()) effective.tau = u.tau();
  absl::StatusOr<RankingDistribution> m = ApplyRankingFunction(effective, p);
  if (!m.ok()) return m.status();
  return NormalizedUtilityOf(p, *m, u);
}

absl::StatusOr<IfCompositionResult> IfCompositionCheck(
    const PredictionMatrix& p, const RankingDistribution& m, int i, int j,
    double distance, double beta, double gamma) {
  const int n = p.num_individuals();
  if (m.size() != n) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "ranking has %d individuals, predictions have %d", m.size(), n));
  }
  if (i < 0 || i >= n || j < 0 || j >= n) {
    return absl::OutOfRangeError(absl::StrFormat(
        "individuals (%d, %d) out of range [0, %d)", i, j, n));
  }
  if (i == j) {
    return absl::InvalidArgumentError("individuals must be distinct");
  }
  if (!(distance >= 0.0) || !(beta > 0.0) || !(gamma > 0.0)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "need distance >= 0, beta > 0, gamma > 0; got %g, %g, %g", distance,
        beta, gamma));
  }
  IfCompositionResult result;
  for (int k = 0; k < n; ++k) {
    result.row_gap = std::max(result.row_gap, std::abs(m(i, k) - m(j, k)));
  }
  result.bound = 2.0 * beta * gamma * distance;
  result.passed = result.row_gap <= result.bound;
  return result;
}

}  // namespace uarank
