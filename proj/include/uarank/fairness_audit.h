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

// Multigroup fairness audits over a finite population model.
//
// Multiaccuracy of f for group S is ||E_x[1{x in S} (f*(x) - f(x))]||_inf;
// multicalibration additionally restricts to the types whose prediction falls
// in a bucket [j_l * delta, (j_l + 1) * delta) for every label l.
//
// The group-level ranking gap for group S and rank k is
//   E_{x ~ D^n, i ~ Unif[n]} [1{x_i in S} (Pr_{r(f*(x))}[i -> k]
//                                         - Pr_{r(f(x))}[i -> k])].
// For UA rankings its magnitude is at most L * n * alpha when f is
// multiaccurate (or multicalibrated and multiaccurate on the full domain) with
// parameter alpha; for the phi-mixture with the utility-optimal ranking it is
// at most phi * L * n * alpha + 1 - phi. TheoremGapExact computes the gap by
// enumerating all T^n type vectors; TheoremGapEstimate samples datasets.

#ifndef UARANK_FAIRNESS_AUDIT_H_
#define UARANK_FAIRNESS_AUDIT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "uarank/population.h"
#include "uarank/ranking_function.h"
#include "uarank/types.h"

namespace uarank {

struct MultiaccuracyReport {
  std::vector<double> per_group;  // aligned with PopulationModel::groups()
  double alpha = 0.0;             // max over groups
};

MultiaccuracyReport MultiaccuracyAlpha(const PopulationModel& pop);

// Bucket vector (j_1, ..., j_L), each in [0, 1/delta - 1].
using Bucket = std::vector<int>;

// Number of buckets per label, 1/delta. Fails unless delta is in (0, 1] and
// 1/delta is an integer.
absl::StatusOr<int> BucketsPerLabel(double delta);

// Bucket of a predicted distribution. Entries equal to 1 go to the top
// bucket.
Bucket BucketOf(std::span<const double> prediction, int buckets_per_label);

struct CalibrationCell {
  int group = 0;
  Bucket bucket;
  double alpha = 0.0;
};

struct MulticalibrationReport {
  double delta = 1.0;
  // Only (group, bucket) cells occupied by at least one type of the group.
  std::vector<CalibrationCell> cells;
  double alpha = 0.0;  // max over cells
};

absl::StatusOr<MulticalibrationReport> MulticalibrationAlpha(
    const PopulationModel& pop, double delta);

// The subpopulation an audit conditions on: a group, optionally narrowed to
// one prediction bucket of width delta.
struct AuditCell {
  int group = 0;
  std::optional<Bucket> bucket;
  double delta = 1.0;
};

struct AuditOptions {
  int num_threads = 1;
  int64_t max_type_vectors = 1'000'000;  // exact path budget on T^n
  int max_dataset_size = 16;             // sampled path budget on n
};

// Signed gaps for every cell (rows) and rank k = 0..n-1 (columns), averaged
// over the audited individual i uniformly. `fn` must be ua, opt or mix.
absl::StatusOr<Matrix> TheoremGapExactTable(const PopulationModel& pop, int n,
                                            const RankingFunctionParams& fn,
                                            std::span<const AuditCell> cells,
                                            const AuditOptions& options = {});

// |gap| for one cell and rank (zero-based `rank`).
absl::StatusOr<double> TheoremGapExact(const PopulationModel& pop, int n,
                                       int rank, const AuditCell& cell,
                                       const RankingFunctionParams& fn,
                                       const AuditOptions& options = {});

// Same quantity for the UA ranking, computed by fixing the audited
// individual to the last position instead of averaging over i. Valid only
// because UA is anonymous.
absl::StatusOr<double> TheoremGapExactFixedLast(
    const PopulationModel& pop, int n, int rank, const AuditCell& cell,
    const AuditOptions& options = {});

// alpha entering the bound: multiaccuracy over all groups, or for bucket
// cells max(multicalibration alpha, full-domain multiaccuracy).
absl::StatusOr<double> AuditAlpha(const PopulationModel& pop,
                                  const AuditCell& cell);

// L n alpha for ua; phi L n alpha + 1 - phi for mix; 1 for opt.
double TheoremBound(const RankingFunctionParams& fn, int num_labels, int n,
                    double alpha);

struct AuditReport {
  std::string group;
  int rank = 0;  // zero-based
  std::optional<Bucket> bucket;
  double delta = 1.0;
  double mean = 0.0;      // signed Monte-Carlo mean
  double estimate = 0.0;  // |mean|
  double mc_error = 0.0;  // standard error of the mean
  int64_t samples = 0;
  uint64_t seed = 0;
  double bound = 0.0;
  double alpha = 0.0;
};

// Monte-Carlo estimate of the gap from `samples` datasets drawn iid from the
// population. Each dataset contributes the exact average over i. Deterministic
// for a fixed seed and independent of the thread count.
absl::StatusOr<AuditReport> TheoremGapEstimate(
    const PopulationModel& pop, int n, int rank, const AuditCell& cell,
    const RankingFunctionParams& fn, int64_t samples, uint64_t seed,
    const AuditOptions& options = {});

struct ClosenessReport {
  double epsilon = 0.0;  // max_x ||f(x) - f*(x)||_1
  double bound = 0.0;    // n * epsilon
  double max_gap = 0.0;
  double mean_gap = 0.0;
  int64_t samples = 0;
  int64_t violations = 0;  // datasets with gap > bound
};

// Samples datasets and checks ||ua(f(x)) - ua(f*(x))||_inf <= n * epsilon.
absl::StatusOr<ClosenessReport> NatureClosenessCheck(
    const PopulationModel& pop, int n, int64_t samples, uint64_t seed,
    const AuditOptions& options = {});

}  // namespace uarank

#endif  // UARANK_FAIRNESS_AUDIT_H_
