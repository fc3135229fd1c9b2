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

#include "uarank/fairness_audit.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "uarank/random.h"
#include "uarank/rank_core.h"

namespace uarank {
namespace {

constexpr int kBlock = 256;

// Per-label biased mass E_x[1{x in cell} (f*(x) - f(x))], max-abs over labels.
double Violation(const PopulationModel& pop, const std::vector<bool>& in_cell) {
  std::vector<double> bias(pop.num_labels(), 0.0);
  for (int t = 0; t < pop.num_types(); ++t) {
    if (!in_cell[t]) continue;
    const PopulationType& type = pop.type(t);
    for (int l = 0; l < pop.num_labels(); ++l) {
      bias[l] += type.weight * (type.ground_truth[l] - type.predicted[l]);
    }
  }
  double worst = 0.0;
  for (double b : bias) worst = std::max(worst, std::abs(b));
  return worst;
}

absl::Status CheckAuditFunction(const RankingFunctionParams& fn,
                                int num_labels) {
  if (fn.id == RankingFunctionId::kPl) {
    return absl::InvalidArgumentError(
        "audits support ranking functions ua, opt and mix, not pl");
  }
  return ValidateRankingFunctionParams(fn, num_labels);
}

// in_cell[type] for one audit cell.
absl::StatusOr<std::vector<bool>> CellMembership(const PopulationModel& pop,
                                                 const AuditCell& cell) {
  if (cell.group < 0 || cell.group >= pop.num_groups()) {
    return absl::OutOfRangeError(
        absl::StrFormat("group index %d out of range", cell.group));
  }
  std::vector<bool> in_cell(pop.num_types());
  if (!cell.bucket.has_value()) {
    for (int t = 0; t < pop.num_types(); ++t) {
      in_cell[t] = pop.InGroup(cell.group, t);
    }
    return in_cell;
  }
  absl::StatusOr<int> m = BucketsPerLabel(cell.delta);
  if (!m.ok()) return m.status();
  if (static_cast<int>(cell.bucket->size()) != pop.num_labels()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("bucket has %d coordinates, expected %d",
                        cell.bucket->size(), pop.num_labels()));
  }
  for (int j : *cell.bucket) {
    if (j < 0 || j >= *m) {
      return absl::InvalidArgumentError(
          absl::StrFormat("bucket coordinate %d outside [0, %d)", j, *m));
    }
  }
  for (int t = 0; t < pop.num_types(); ++t) {
    in_cell[t] = pop.InGroup(cell.group, t) &&
                 BucketOf(pop.type(t).predicted, *m) == *cell.bucket;
  }
  return in_cell;
}

absl::Status CheckDatasetShape(int n, int rank) {
  if (n < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("dataset size n = %d must be at least 1", n));
  }
  if (rank < 0 || rank >= n) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "position k = %d outside [1, %d]", rank + 1, n));
  }
  return absl::OkStatus();
}

// Ground-truth and predicted matrices for a dataset of types.
struct DatasetMatrices {
  PredictionMatrix truth;
  PredictionMatrix predicted;
};

DatasetMatrices BuildDataset(const PopulationModel& pop,
                             std::span<const int> types) {
  const int n = static_cast<int>(types.size());
  Matrix truth(n, pop.num_labels()), pred(n, pop.num_labels());
  for (int i = 0; i < n; ++i) {
    const PopulationType& t = pop.type(types[i]);
    std::copy(t.ground_truth.begin(), t.ground_truth.end(),
              truth.row(i).begin());
    std::copy(t.predicted.begin(), t.predicted.end(), pred.row(i).begin());
  }
  // Rows were validated by PopulationModel::Create.
  return {*PredictionMatrix::Create(std::move(truth)),
          *PredictionMatrix::Create(std::move(pred))};
}

std::vector<double> WeightCdf(const PopulationModel& pop) {
  std::vector<double> cdf(pop.num_types());
  double acc = 0.0;
  for (int t = 0; t < pop.num_types(); ++t) {
    acc += pop.type(t).weight;
    cdf[t] = acc;
  }
  return cdf;
}

void SampleTypes(CounterRng& rng, const std::vector<double>& cdf,
                 std::vector<int>& types) {
  for (int& t : types) t = rng.Discrete(cdf.data(), static_cast<int>(cdf.size()));
}

absl::StatusOr<int64_t> TypeVectorCount(const PopulationModel& pop, int n,
                                        const AuditOptions& options) {
  int64_t count = 1;
  for (int i = 0; i < n; ++i) {
    if (count > options.max_type_vectors / pop.num_types()) {
      return absl::ResourceExhaustedError(absl::StrFormat(
          "exact audit would enumerate %d^%d type vectors, budget is %d",
          pop.num_types(), n, options.max_type_vectors));
    }
    count *= pop.num_types();
  }
  return count;
}

// Decodes type vector `index` (base T, individual 0 least significant) and
// returns its probability under D^n.
double DecodeTypeVector(const PopulationModel& pop, int64_t index,
                        std::vector<int>& types) {
  double weight = 1.0;
  for (int& t : types) {
    t = static_cast<int>(index % pop.num_types());
    index /= pop.num_types();
    weight *= pop.type(t).weight;
  }
  return weight;
}

// Runs `visit(types, weight, partial)` over every type vector with nonzero
// probability, accumulating into per-block partial matrices that are summed
// in block order.
template <typename Visit>
Matrix EnumerateTypeVectors(const PopulationModel& pop, int n, int64_t count,
                            int rows, int cols, int num_threads,
                            const Visit& visit) {
  const int64_t num_blocks = (count + kBlock - 1) / kBlock;
  std::vector<Matrix> partial(num_blocks, Matrix(rows, cols));
  ParallelFor(static_cast<int>(num_blocks), num_threads, [&](int block) {
    std::vector<int> types(n);
    const int64_t end = std::min<int64_t>(count, (block + 1) * int64_t{kBlock});
    for (int64_t v = block * int64_t{kBlock}; v < end; ++v) {
      const double weight = DecodeTypeVector(pop, v, types);
      if (weight == 0.0) continue;
      visit(types, weight, partial[block]);
    }
  });
  Matrix total(rows, cols);
  for (const Matrix& m : partial) {
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) total(r, c) += m(r, c);
    }
  }
  return total;
}

}  // namespace

MultiaccuracyReport MultiaccuracyAlpha(const PopulationModel& pop) {
  MultiaccuracyReport report;
  std::vector<bool> in_group(pop.num_types());
  for (int g = 0; g < pop.num_groups(); ++g) {
    for (int t = 0; t < pop.num_types(); ++t) in_group[t] = pop.InGroup(g, t);
    report.per_group.push_back(Violation(pop, in_group));
    report.alpha = std::max(report.alpha, report.per_group.back());
  }
  return report;
}

absl::StatusOr<int> BucketsPerLabel(double delta) {
  if (!(delta > 0.0 && delta <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("bucket width delta = %g outside (0, 1]", delta));
  }
  const double inv = 1.0 / delta;
  const double rounded = std::round(inv);
  if (std::abs(inv - rounded) > 1e-9 * rounded) {
    return absl::InvalidArgumentError(
        absl::StrFormat("1/delta = %g is not an integer", inv));
  }
  return static_cast<int>(rounded);
}

Bucket BucketOf(std::span<const double> prediction, int buckets_per_label) {
  Bucket bucket(prediction.size());
  for (size_t l = 0; l < prediction.size(); ++l) {
    // The epsilon keeps decimal boundaries such as 0.6 / 0.2 in the upper
    // bucket despite binary rounding.
    const int j = static_cast<int>(
        std::floor(prediction[l] * buckets_per_label + 1e-12));
    bucket[l] = std::clamp(j, 0, buckets_per_label - 1);
  }
  return bucket;
}

absl::StatusOr<MulticalibrationReport> MulticalibrationAlpha(
    const PopulationModel& pop, double delta) {
  absl::StatusOr<int> m = BucketsPerLabel(delta);
  if (!m.ok()) return m.status();
  MulticalibrationReport report;
  report.delta = delta;
  std::vector<Bucket> type_bucket(pop.num_types());
  for (int t = 0; t < pop.num_types(); ++t) {
    type_bucket[t] = BucketOf(pop.type(t).predicted, *m);
  }
  std::vector<bool> in_cell(pop.num_types());
  for (int g = 0; g < pop.num_groups(); ++g) {
    // Occupied buckets of this group, in lexicographic order.
    std::map<Bucket, std::vector<int>> occupied;
    for (int t : pop.group(g).members) occupied[type_bucket[t]].push_back(t);
    for (const auto& [bucket, members] : occupied) {
      std::fill(in_cell.begin(), in_cell.end(), false);
      for (int t : members) in_cell[t] = true;
      CalibrationCell cell{g, bucket, Violation(pop, in_cell)};
      report.alpha = std::max(report.alpha, cell.alpha);
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

absl::StatusOr<Matrix> TheoremGapExactTable(const PopulationModel& pop, int n,
                                            const RankingFunctionParams& fn,
                                            std::span<const AuditCell> cells,
                                            const AuditOptions& options) {
  if (auto s = CheckAuditFunction(fn, pop.num_labels()); !s.ok()) return s;
  if (auto s = CheckDatasetShape(n, 0); !s.ok()) return s;
  std::vector<std::vector<bool>> in_cell;
  for (const AuditCell& cell : cells) {
    absl::StatusOr<std::vector<bool>> members = CellMembership(pop, cell);
    if (!members.ok()) return members.status();
    in_cell.push_back(*std::move(members));
  }
  absl::StatusOr<int64_t> count = TypeVectorCount(pop, n, options);
  if (!count.ok()) return count.status();

  RankingFunctionParams inner = fn;
  inner.num_threads = 1;
  const int num_cells = static_cast<int>(cells.size());
  const double share = 1.0 / n;
  return EnumerateTypeVectors(
      pop, n, *count, num_cells, n, options.num_threads,
      [&](const std::vector<int>& types, double weight, Matrix& acc) {
        const DatasetMatrices data = BuildDataset(pop, types);
        const RankingDistribution truth =
            *ApplyRankingFunction(inner, data.truth);
        const RankingDistribution pred =
            *ApplyRankingFunction(inner, data.predicted);
        for (int c = 0; c < num_cells; ++c) {
          for (int i = 0; i < n; ++i) {
            if (!in_cell[c][types[i]]) continue;
            for (int k = 0; k < n; ++k) {
              acc(c, k) += weight * share * (truth(i, k) - pred(i, k));
            }
          }
        }
      });
}

absl::StatusOr<double> TheoremGapExact(const PopulationModel& pop, int n,
                                       int rank, const AuditCell& cell,
                                       const RankingFunctionParams& fn,
                                       const AuditOptions& options) {
  if (auto s = CheckDatasetShape(n, rank); !s.ok()) return s;
  absl::StatusOr<Matrix> table =
      TheoremGapExactTable(pop, n, fn, std::span(&cell, 1), options);
  if (!table.ok()) return table.status();
  return std::abs((*table)(0, rank));
}

absl::StatusOr<double> TheoremGapExactFixedLast(const PopulationModel& pop,
                                                int n, int rank,
                                                const AuditCell& cell,
                                                const AuditOptions& options) {
  if (auto s = CheckDatasetShape(n, rank); !s.ok()) return s;
  absl::StatusOr<std::vector<bool>> in_cell = CellMembership(pop, cell);
  if (!in_cell.ok()) return in_cell.status();
  absl::StatusOr<int64_t> count = TypeVectorCount(pop, n, options);
  if (!count.ok()) return count.status();
  const Matrix total = EnumerateTypeVectors(
      pop, n, *count, 1, 1, options.num_threads,
      [&](const std::vector<int>& types, double weight, Matrix& acc) {
        if (!(*in_cell)[types[n - 1]]) return;
        const DatasetMatrices data = BuildDataset(pop, types);
        acc(0, 0) += weight * (UaRank(data.truth)(n - 1, rank) -
                               UaRank(data.predicted)(n - 1, rank));
      });
  return std::abs(total(0, 0));
}

absl::StatusOr<double> AuditAlpha(const PopulationModel& pop,
                                  const AuditCell& cell) {
  const MultiaccuracyReport accuracy = MultiaccuracyAlpha(pop);
  if (!cell.bucket.has_value()) return accuracy.alpha;
  absl::StatusOr<MulticalibrationReport> calibration =
      MulticalibrationAlpha(pop, cell.delta);
  if (!calibration.ok()) return calibration.status();
  return std::max(calibration->alpha,
                  accuracy.per_group[pop.full_domain_group()]);
}

double TheoremBound(const RankingFunctionParams& fn, int num_labels, int n,
                    double alpha) {
  const double ua_bound = static_cast<double>(num_labels) * n * alpha;
  switch (fn.id) {
    case RankingFunctionId::kUa:
      return ua_bound;
    case RankingFunctionId::kMix:
      return fn.phi * ua_bound + (1.0 - fn.phi);
    case RankingFunctionId::kOpt:
    case RankingFunctionId::kPl:
      return 1.0;
  }
  return 1.0;
}

absl::StatusOr<AuditReport> TheoremGapEstimate(
    const PopulationModel& pop, int n, int rank, const AuditCell& cell,
    const RankingFunctionParams& fn, int64_t samples, uint64_t seed,
    const AuditOptions& options) {
  if (auto s = CheckAuditFunction(fn, pop.num_labels()); !s.ok()) return s;
  if (auto s = CheckDatasetShape(n, rank); !s.ok()) return s;
  if (n > options.max_dataset_size) {
    return absl::ResourceExhaustedError(
        absl::StrFormat("sampled audit limited to n <= %d, got n = %d",
                        options.max_dataset_size, n));
  }
  if (samples < 1) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "Monte-Carlo sample count must be at least 1, got %d", samples));
  }
  absl::StatusOr<std::vector<bool>> in_cell = CellMembership(pop, cell);
  if (!in_cell.ok()) return in_cell.status();
  absl::StatusOr<double> alpha = AuditAlpha(pop, cell);
  if (!alpha.ok()) return alpha.status();

  RankingFunctionParams inner = fn;
  inner.num_threads = 1;
  const std::vector<double> cdf = WeightCdf(pop);
  std::vector<double> values(samples, 0.0);
  const int64_t num_blocks = (samples + kBlock - 1) / kBlock;
  ParallelFor(static_cast<int>(num_blocks), options.num_threads,
              [&](int block) {
    std::vector<int> types(n);
    const int64_t end = std::min<int64_t>(samples, (block + 1) * int64_t{kBlock});
    for (int64_t s = block * int64_t{kBlock}; s < end; ++s) {
      CounterRng rng(seed, static_cast<uint64_t>(s));
      SampleTypes(rng, cdf, types);
      const DatasetMatrices data = BuildDataset(pop, types);
      const RankingDistribution truth = *ApplyRankingFunction(inner, data.truth);
      const RankingDistribution pred =
          *ApplyRankingFunction(inner, data.predicted);
      double y = 0.0;
      for (int i = 0; i < n; ++i) {
        if ((*in_cell)[types[i]]) y += truth(i, rank) - pred(i, rank);
      }
      values[s] = y / n;
    }
  });

  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(samples);
  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);

  AuditReport report;
  report.group = pop.group(cell.group).name;
  report.rank = rank;
  report.bucket = cell.bucket;
  report.delta = cell.delta;
  report.mean = mean;
  report.estimate = std::abs(mean);
  report.mc_error =
      samples > 1 ? std::sqrt(sq / static_cast<double>(samples - 1) /
                              static_cast<double>(samples))
                  : 0.0;
  report.samples = samples;
  report.seed = seed;
  report.alpha = *alpha;
  report.bound = TheoremBound(fn, pop.num_labels(), n, *alpha);
  return report;
}

absl::StatusOr<ClosenessReport> NatureClosenessCheck(
    const PopulationModel& pop, int n, int64_t samples, uint64_t seed,
    const AuditOptions& options) {
  if (n < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("dataset size n = %d must be at least 1", n));
  }
  if (samples < 1) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "sample count must be at least 1, got %d", samples));
  }
  ClosenessReport report;
  for (const PopulationType& t : pop.types()) {
    double dist = 0.0;
    for (int l = 0; l < pop.num_labels(); ++l) {
      dist += std::abs(t.predicted[l] - t.ground_truth[l]);
    }
    report.epsilon = std::max(report.epsilon, dist);
  }
  report.bound = n * report.epsilon;
  report.samples = samples;

  const std::vector<double> cdf = WeightCdf(pop);
  std::vector<double> gaps(samples, 0.0);
  const int64_t num_blocks = (samples + kBlock - 1) / kBlock;
  ParallelFor(static_cast<int>(num_blocks), options.num_threads,
              [&](int block) {
    std::vector<int> types(n);
    const int64_t end = std::min<int64_t>(samples, (block + 1) * int64_t{kBlock});
    for (int64_t s = block * int64_t{kBlock}; s < end; ++s) {
      CounterRng rng(seed, static_cast<uint64_t>(s));
      SampleTypes(rng, cdf, types);
      const DatasetMatrices data = BuildDataset(pop, types);
      gaps[s] = InfNormDistance(UaRank(data.predicted).matrix(),
                                UaRank(data.truth).matrix());
    }
  });
  double sum = 0.0;
  for (double g : gaps) {
    sum += g;
    report.max_gap = std::max(report.max_gap, g);
    if (g > report.bound + 1e-12) ++report.violations;
  }
  report.mean_gap = sum / static_cast<double>(samples);
  return report;
}

}  // namespace uarank
