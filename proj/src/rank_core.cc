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

#include <algorithm>
#include <cassert>
#include <cmath>
#include <mutex>
#include <numeric>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "uarank/random.h"

namespace uarank {
namespace {

// Per-row mass strictly above and strictly below each label. Both are
// accumulated directly rather than as 1 - x to avoid cancellation.
struct LabelSplits {
  Matrix above;  // above(t, l) = sum_{l' > l} p(t, l')
  Matrix below;  // below(t, l) = sum_{l' < l} p(t, l')

  explicit LabelSplits(const PredictionMatrix& p)
      : above(p.num_individuals(), p.num_labels()),
        below(p.num_individuals(), p.num_labels()) {
    const int labels = p.num_labels();
    for (int t = 0; t < p.num_individuals(); ++t) {
      double acc = 0.0;
      for (int l = 0; l < labels; ++l) {
        below(t, l) = acc;
        acc += p.prob(t, l);
      }
      acc = 0.0;
      for (int l = labels - 1; l >= 0; --l) {
        above(t, l) = acc;
        acc += p.prob(t, l);
      }
    }
  }
};

// One step of the count recurrence. `prev` holds the slice after s-1
// individuals (nonzero only for j + jp <= s - 1); writes the slice after s
// individuals into `cur` for all j + jp <= s:
//   cur[j][jp] = same * prev[j-1][jp] + above * prev[j][jp-1]
//              + below * prev[j][jp].
void AdvanceCounts(const double* prev, double* cur, int dim, int s,
                   double same, double above, double below) {
  for (int j = 0; j <= s; ++j) {
    const double* prev_row = prev + static_cast<size_t>(j) * dim;
    const double* prev_row_minus =
        j > 0 ? prev + static_cast<size_t>(j - 1) * dim : nullptr;
    double* cur_row = cur + static_cast<size_t>(j) * dim;
    for (int jp = 0; jp <= s - j; ++jp) {
      double v = 0.0;
      if (j > 0) v += same * prev_row_minus[jp];
      if (jp > 0) v += above * prev_row[jp - 1];
      if (j + jp <= s - 1) v += below * prev_row[jp];
      cur_row[jp] = v;
    }
  }
}

// Reusable buffers for one (individual, label) task.
struct Workspace {
  std::vector<double> prev, cur, prefix;
  explicit Workspace(int dim)
      : prev(static_cast<size_t>(dim) * dim),
        cur(static_cast<size_t>(dim) * dim),
        prefix(static_cast<size_t>(dim) + 1) {}
};

// Pr[i -> r | label_i = label] for r = 0..n-1, written to `out`.
void ConditionalRanks(const PredictionMatrix& p, const LabelSplits& splits,
                      int individual, int label, Workspace& ws,
                      double* out) {
  const int n = p.num_individuals();
  const int dim = n;
  std::fill(ws.prev.begin(), ws.prev.end(), 0.0);
  ws.prev[0] = 1.0;

  int s = 0;
  for (int t = 0; t < n; ++t) {
    if (t == individual) continue;
    ++s;
    AdvanceCounts(ws.prev.data(), ws.cur.data(), dim, s, p.prob(t, label),
                  splits.above(t, label), splits.below(t, label));
    std::swap(ws.prev, ws.cur);
  }
  // ws.prev now holds counts over all n-1 others; valid for j + jp <= n-1.
  const int others = n - 1;
  std::fill(out, out + n, 0.0);
  for (int j = 0; j <= others; ++j) {
    const double* row = ws.prev.data() + static_cast<size_t>(j) * dim;
    const int width = others - j;  // jp ranges over [0, width]
    ws.prefix[0] = 0.0;
    for (int jp = 0; jp <= width; ++jp) ws.prefix[jp + 1] = ws.prefix[jp] + row[jp];
    const double share = 1.0 / (j + 1);
    // With rank k = r + 1, individual i lands at k when
    // k - (j + 1) <= N_above < k, i.e. jp in [r - j, r].
    for (int r = 0; r < n; ++r) {
      const int lo = std::max(0, r - j);
      const int hi = std::min(r, width);
      if (lo > hi) continue;
      out[r] += share * (ws.prefix[hi + 1] - ws.prefix[lo]);
    }
  }
}

absl::Status CheckTauMatches(const PredictionMatrix& p,
                             const ClassUtilityMap& tau) {
  if (tau.num_labels() != p.num_labels()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "utility map has %d label values but predictions have %d labels",
        tau.num_labels(), p.num_labels()));
  }
  return absl::OkStatus();
}

RankingDistribution PermutationFromOrder(const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  Matrix m(n, n);
  for (int r = 0; r < n; ++r) m(order[r], r) = 1.0;
  return RankingDistribution::FromTrusted(std::move(m));
}

}  // namespace

double LabelCountTable::SliceTotal(int t) const {
  double total = 0.0;
  for (int j = 0; j < dim; ++j) {
    for (int jp = 0; jp < dim; ++jp) total += at(t, j, jp);
  }
  return total;
}

absl::StatusOr<LabelCountTable> BuildLabelCountTable(const PredictionMatrix& p,
                                                     int excluded, int label) {
  const int n = p.num_individuals();
  if (excluded < 0 || excluded >= n) {
    return absl::OutOfRangeError(
        absl::StrFormat("individual %d out of range [0, %d)", excluded, n));
  }
  if (label < 0 || label >= p.num_labels()) {
    return absl::OutOfRangeError(absl::StrFormat(
        "label %d out of range [0, %d)", label, p.num_labels()));
  }
  const LabelSplits splits(p);
  LabelCountTable table;
  table.excluded = excluded;
  table.label = label;
  table.dim = n;
  const size_t slice = static_cast<size_t>(n) * n;
  table.values.assign(slice * n, 0.0);
  table.values[0] = 1.0;
  int s = 0;
  for (int t = 0; t < n; ++t) {
    if (t == excluded) continue;
    ++s;
    AdvanceCounts(table.values.data() + (s - 1) * slice,
                  table.values.data() + s * slice, n, s, p.prob(t, label),
                  splits.above(t, label), splits.below(t, label));
  }
  return table;
}

absl::StatusOr<std::vector<double>> UaRankConditional(
    const PredictionMatrix& p, int individual, int label) {
  const int n = p.num_individuals();
  if (individual < 0 || individual >= n) {
    return absl::OutOfRangeError(
        absl::StrFormat("individual %d out of range [0, %d)", individual, n));
  }
  if (label < 0 || label >= p.num_labels()) {
    return absl::OutOfRangeError(absl::StrFormat(
        "label %d out of range [0, %d)", label, p.num_labels()));
  }
  const LabelSplits splits(p);
  Workspace ws(n);
  std::vector<double> out(n);
  ConditionalRanks(p, splits, individual, label, ws, out.data());
  return out;
}

RankingDistribution UaRank(const PredictionMatrix& p,
                           const UaRankOptions& options) {
  const int n = p.num_individuals();
  const int labels = p.num_labels();
  const LabelSplits splits(p);

  // conditional[(i * L + l) * n + r]; zero-probability labels are skipped
  // since they contribute exactly 0 to the total.
  std::vector<double> conditional(static_cast<size_t>(n) * labels * n, 0.0);
  const int num_tasks = n * labels;
  const int workers = std::max(1, options.num_threads);
  // One workspace per chunk of tasks keeps allocation off the inner loop.
  const int num_chunks = std::min(num_tasks, workers * 4);
  ParallelFor(num_chunks, workers, [&](int chunk) {
    Workspace ws(n);
    for (int task = chunk; task < num_tasks; task += num_chunks) {
      const int i = task / labels;
      const int l = task % labels;
      if (p.prob(i, l) == 0.0) continue;
      ConditionalRanks(p, splits, i, l,
                       ws, conditional.data() + static_cast<size_t>(task) * n);
    }
  });

  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < labels; ++l) {
      const double w = p.prob(i, l);
      if (w == 0.0) continue;
      const double* c =
          conditional.data() + (static_cast<size_t>(i) * labels + l) * n;
      for (int r = 0; r < n; ++r) m(i, r) += w * c[r];
    }
  }
  return RankingDistribution::FromTrusted(std::move(m));
}

absl::StatusOr<RankingDistribution> UaRankOracle(const PredictionMatrix& p,
                                                 const OracleOptions& options) {
  const int n = p.num_individuals();
  const int labels = p.num_labels();
  int64_t vectors = 1;
  for (int i = 0; i < n; ++i) {
    if (vectors > options.max_label_vectors / labels) {
      return absl::ResourceExhaustedError(absl::StrFormat(
          "oracle would enumerate %d^%d label vectors, budget is %d", labels,
          n, options.max_label_vectors));
    }
    vectors *= labels;
  }

  Matrix m(n, n);
  std::vector<int> assignment(n, 0);
  std::vector<int> count(labels), above(labels);
  for (int64_t v = 0; v < vectors; ++v) {
    double weight = 1.0;
    for (int i = 0; i < n && weight != 0.0; ++i) {
      weight *= p.prob(i, assignment[i]);
    }
    if (weight != 0.0) {
      std::fill(count.begin(), count.end(), 0);
      for (int i = 0; i < n; ++i) ++count[assignment[i]];
      int acc = 0;
      for (int l = labels - 1; l >= 0; --l) {
        above[l] = acc;
        acc += count[l];
      }
      for (int i = 0; i < n; ++i) {
        const int l = assignment[i];
        const double share = weight / count[l];
        // Uniform over ranks (above, above + count] in one-based terms.
        for (int r = above[l]; r < above[l] + count[l]; ++r) m(i, r) += share;
      }
    }
    // Odometer increment, individual 0 fastest.
    for (int i = 0; i < n; ++i) {
      if (++assignment[i] < labels) break;
      assignment[i] = 0;
    }
  }
  return RankingDistribution::FromTrusted(std::move(m));
}

absl::StatusOr<RankingDistribution> OptRank(const PredictionMatrix& p,
                                            const ClassUtilityMap& tau) {
  if (auto s = CheckTauMatches(p, tau); !s.ok()) return s;
  const std::vector<double> scores = tau.Scores(p);
  std::vector<int> order(p.num_individuals());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return scores[a] > scores[b]; });
  return PermutationFromOrder(order);
}

absl::StatusOr<RankingDistribution> MinRank(const PredictionMatrix& p,
                                            const ClassUtilityMap& tau) {
  if (auto s = CheckTauMatches(p, tau); !s.ok()) return s;
  const std::vector<double> scores = tau.Scores(p);
  std::vector<int> order(p.num_individuals());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return scores[a] < scores[b]; });
  return PermutationFromOrder(order);
}

absl::StatusOr<RankingDistribution> MixRank(const PredictionMatrix& p,
                                            const ClassUtilityMap& tau,
                                            double phi,
                                            const UaRankOptions& options) {
  if (!(phi >= 0.0 && phi <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("mixture weight phi = %g outside [0, 1]", phi));
  }
  absl::StatusOr<RankingDistribution> opt = OptRank(p, tau);
  if (!opt.ok()) return opt.status();
  if (phi == 0.0) return *opt;
  RankingDistribution ua = UaRank(p, options);
  if (phi == 1.0) return ua;
  return RankingDistribution::Mix(ua, *opt, phi);
}

absl::StatusOr<RankingDistribution> PlRank(const PredictionMatrix& p,
                                           const ClassUtilityMap& tau,
                                           const PlOptions& options) {
  if (auto s = CheckTauMatches(p, tau); !s.ok()) return s;
  if (options.samples < 1) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "Plackett-Luce needs at least one sample, got %d", options.samples));
  }
  constexpr int64_t kChunk = 4096;
  const int n = p.num_individuals();
  const std::vector<double> scores = tau.Scores(p);
  const int64_t num_chunks = (options.samples + kChunk - 1) / kChunk;

  std::vector<int64_t> counts(static_cast<size_t>(n) * n, 0);
  std::mutex merge_mu;
  ParallelFor(static_cast<int>(num_chunks), options.num_threads,
              [&](int chunk) {
    CounterRng rng(options.seed, static_cast<uint64_t>(chunk));
    const int64_t begin = chunk * kChunk;
    const int64_t end = std::min(options.samples, begin + kChunk);
    std::vector<int64_t> local(static_cast<size_t>(n) * n, 0);
    std::vector<double> keys(n);
    std::vector<int> order(n);
    for (int64_t s = begin; s < end; ++s) {
      for (int i = 0; i < n; ++i) keys[i] = scores[i] + rng.Gumbel();
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        return keys[a] > keys[b] || (keys[a] == keys[b] && a < b);
      });
      for (int r = 0; r < n; ++r) ++local[static_cast<size_t>(order[r]) * n + r];
    }
    // Integer merge: order of chunk completion does not matter.
    std::lock_guard<std::mutex> lock(merge_mu);
    for (size_t x = 0; x < counts.size(); ++x) counts[x] += local[x];
  });

  Matrix m(n, n);
  const double inv = 1.0 / static_cast<double>(options.samples);
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < n; ++r) {
      m(i, r) = static_cast<double>(counts[static_cast<size_t>(i) * n + r]) *
                inv;
    }
  }
  return RankingDistribution::FromTrusted(std::move(m));
}

absl::StatusOr<RankingDistribution> PlRankExact(const PredictionMatrix& p,
                                                const ClassUtilityMap& tau) {
  if (auto s = CheckTauMatches(p, tau); !s.ok()) return s;
  const int n = p.num_individuals();
  if (n > kPlExactMaxIndividuals) {
    return absl::ResourceExhaustedError(absl::StrFormat(
        "exact Plackett-Luce enumerates n! orderings; n = %d exceeds %d", n,
        kPlExactMaxIndividuals));
  }
  const std::vector<double> scores = tau.Scores(p);
  const double top = *std::max_element(scores.begin(), scores.end());
  std::vector<double> strength(n);
  for (int i = 0; i < n; ++i) strength[i] = std::exp(scores[i] - top);

  Matrix m(n, n);
  std::vector<int> order(n);
  std::vector<double> remaining(n + 1);
  std::iota(order.begin(), order.end(), 0);
  do {
    // remaining[r] = strength of everyone not placed in ranks 0..r-1.
    remaining[n] = 0.0;
    for (int r = n - 1; r >= 0; --r) {
      remaining[r] = remaining[r + 1] + strength[order[r]];
    }
    double prob = 1.0;
    for (int r = 0; r < n; ++r) prob *= strength[order[r]] / remaining[r];
    for (int r = 0; r < n; ++r) m(order[r], r) += prob;
  } while (std::next_permutation(order.begin(), order.end()));
  return RankingDistribution::FromTrusted(std::move(m));
}

}  // namespace uarank
