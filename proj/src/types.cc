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

#include "uarank/types.h"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace uarank {

Matrix::Matrix(int rows, int cols, double fill)
    : rows_(rows),
      cols_(cols),
      data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {}

double Matrix::RowSum(int r) const {
  double s = 0.0;
  for (double v : row(r)) s += v;
  return s;
}

double Matrix::ColSum(int c) const {
  double s = 0.0;
  for (int r = 0; r < rows_; ++r) s += (*this)(r, c);
  return s;
}

double InfNormDistance(const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  double gap = 0.0;
  for (size_t i = 0; i < a.data().size(); ++i) {
    gap = std::max(gap, std::abs(a.data()[i] - b.data()[i]));
  }
  return gap;
}

double L1Distance(const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  double total = 0.0;
  for (size_t i = 0; i < a.data().size(); ++i) {
    total += std::abs(a.data()[i] - b.data()[i]);
  }
  return total;
}

// ---------------------------------------------------------------------------
// PredictionMatrix

absl::StatusOr<PredictionMatrix> PredictionMatrix::Create(Matrix m) {
  if (m.rows() < 1) {
    return absl::InvalidArgumentError(
        "prediction matrix needs at least one individual");
  }
  if (m.cols() < 1) {
    return absl::InvalidArgumentError(
        "prediction matrix needs at least one label");
  }
  for (int i = 0; i < m.rows(); ++i) {
    for (int l = 0; l < m.cols(); ++l) {
      const double v = m(i, l);
      if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
        return absl::InvalidArgumentError(absl::StrFormat(
            "row %d column %d: probability %g outside [0, 1]", i + 1, l + 1,
            v));
      }
    }
    const double sum = m.RowSum(i);
    if (std::abs(sum - 1.0) > kRowSumTolerance) {
      return absl::InvalidArgumentError(
          absl::StrFormat("row %d sums to %.10g, expected 1 within %g", i + 1,
                          sum, kRowSumTolerance));
    }
    // Already-normalized rows are left bit-identical so that loading is
    // idempotent.
    if (std::abs(sum - 1.0) > 1e-12) {
      for (double& v : m.row(i)) v /= sum;
    }
  }
  return PredictionMatrix(std::move(m));
}

absl::StatusOr<PredictionMatrix> PredictionMatrix::Create(
    const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) {
    return absl::InvalidArgumentError(
        "prediction matrix needs at least one individual");
  }
  const int n = static_cast<int>(rows.size());
  const int labels = static_cast<int>(rows.front().size());
  Matrix m(n, labels);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != labels) {
      return absl::InvalidArgumentError(
          absl::StrFormat("row %d has %d entries, expected %d", i + 1,
                          rows[i].size(), labels));
    }
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return Create(std::move(m));
}

PredictionMatrix PredictionMatrix::PermuteRows(
    std::span<const int> perm) const {
  assert(static_cast<int>(perm.size()) == num_individuals());
  Matrix out(num_individuals(), num_labels());
  for (int i = 0; i < num_individuals(); ++i) {
    const auto src = probs_.row(perm[i]);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return PredictionMatrix(std::move(out));
}

PredictionMatrix PredictionMatrix::AppendZeroLabel() const {
  Matrix out(num_individuals(), num_labels() + 1);
  for (int i = 0; i < num_individuals(); ++i) {
    const auto src = probs_.row(i);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return PredictionMatrix(std::move(out));
}

// ---------------------------------------------------------------------------
// RankingDistribution

absl::StatusOr<RankingDistribution> RankingDistribution::Create(Matrix m) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "ranking distribution must be square and nonempty, got %dx%d",
        m.rows(), m.cols()));
  }
  for (double v : m.data()) {
    if (!std::isfinite(v) || v < -kDoublyStochasticTolerance ||
        v > 1.0 + kDoublyStochasticTolerance) {
      return absl::InvalidArgumentError(
          absl::StrFormat("ranking probability %g outside [0, 1]", v));
    }
  }
  RankingDistribution dist(std::move(m));
  const double dev = dist.MaxMarginalDeviation();
  if (dev > kDoublyStochasticTolerance) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "matrix is not doubly stochastic: marginal off by %g", dev));
  }
  return dist;
}

RankingDistribution RankingDistribution::Identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return RankingDistribution(std::move(m));
}

double RankingDistribution::MaxMarginalDeviation() const {
  double dev = 0.0;
  for (int i = 0; i < size(); ++i) {
    dev = std::max(dev, std::abs(m_.RowSum(i) - 1.0));
    dev = std::max(dev, std::abs(m_.ColSum(i) - 1.0));
  }
  return dev;
}

RankingDistribution RankingDistribution::Mix(const RankingDistribution& a,
                                             const RankingDistribution& b,
                                             double phi) {
  assert(a.size() == b.size());
  Matrix out(a.size(), a.size());
  for (int i = 0; i < a.size(); ++i) {
    for (int k = 0; k < a.size(); ++k) {
      out(i, k) = phi * a(i, k) + (1.0 - phi) * b(i, k);
    }
  }
  return RankingDistribution(std::move(out));
}

// ---------------------------------------------------------------------------
// Utility model

absl::StatusOr<ClassUtilityMap> ClassUtilityMap::Create(
    std::vector<double> values) {
  if (values.empty()) {
    return absl::InvalidArgumentError("label values must be nonempty");
  }
  if (!std::isfinite(values[0]) || values[0] < 0.0) {
    return absl::InvalidArgumentError(
        absl::StrFormat("label value v_1 = %g must be nonnegative", values[0]));
  }
  for (size_t l = 1; l < values.size(); ++l) {
    if (!std::isfinite(values[l]) || !(values[l] > values[l - 1])) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "label values must be strictly increasing: v_%d = %g, v_%d = %g", l,
          values[l - 1], l + 1, values[l]));
    }
  }
  return ClassUtilityMap(std::move(values));
}

ClassUtilityMap ClassUtilityMap::Linear(int num_labels) {
  std::vector<double> v(num_labels);
  for (int l = 0; l < num_labels; ++l) v[l] = l + 1;
  return ClassUtilityMap(std::move(v));
}

double ClassUtilityMap::Score(std::span<const double> distribution) const {
  assert(distribution.size() == values_.size());
  double s = 0.0;
  for (size_t l = 0; l < values_.size(); ++l) s += values_[l] * distribution[l];
  return s;
}

std::vector<double> ClassUtilityMap::Scores(const PredictionMatrix& p) const {
  std::vector<double> out(p.num_individuals());
  for (int i = 0; i < p.num_individuals(); ++i) out[i] = Score(p.row(i));
  return out;
}

absl::StatusOr<UtilitySpec> UtilitySpec::Create(ClassUtilityMap tau,
                                                std::vector<double> weights) {
  if (weights.empty()) {
    return absl::InvalidArgumentError("position weights must be nonempty");
  }
  for (size_t k = 0; k < weights.size(); ++k) {
    if (!std::isfinite(weights[k]) || weights[k] < 0.0) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "position weight w_%d = %g must be nonnegative", k + 1, weights[k]));
    }
    if (k > 0 && weights[k] > weights[k - 1]) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "position weights must be nonincreasing: w_%d = %g < w_%d = %g", k,
          weights[k - 1], k + 1, weights[k]));
    }
  }
  return UtilitySpec(std::move(tau), std::move(weights));
}

UtilitySpec UtilitySpec::Dcg(ClassUtilityMap tau, int n) {
  std::vector<double> w(n);
  for (int k = 1; k <= n; ++k) w[k - 1] = 1.0 / std::log2(1.0 + k);
  return UtilitySpec(std::move(tau), std::move(w));
}

}  // namespace uarank
