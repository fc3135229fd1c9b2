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

// Core value types: dense matrices, prediction matrices (n individuals by L
// ordered labels), ranking distributions (n by n rank marginals) and the
// utility model used to score rankings.
//
// Indexing is zero-based throughout the library. Label index 0 is the least
// preferred label and label index L-1 the most preferred one. Rank index 0 is
// the top position.

#ifndef UARANK_TYPES_H_
#define UARANK_TYPES_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace uarank {

// Row-major dense matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int r, int c) { return data_[Index(r, c)]; }
  double operator()(int r, int c) const { return data_[Index(r, c)]; }

  std::span<double> row(int r) {
    return {data_.data() + static_cast<size_t>(r) * cols_,
            static_cast<size_t>(cols_)};
  }
  std::span<const double> row(int r) const {
    return {data_.data() + static_cast<size_t>(r) * cols_,
            static_cast<size_t>(cols_)};
  }

  const std::vector<double>& data() const { return data_; }

  double RowSum(int r) const;
  double ColSum(int c) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  size_t Index(int r, int c) const {
    return static_cast<size_t>(r) * cols_ + c;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// Entrywise max |a - b|. Dimensions must agree.
double InfNormDistance(const Matrix& a, const Matrix& b);
// Entrywise sum |a - b|. Dimensions must agree.
double L1Distance(const Matrix& a, const Matrix& b);

// Tolerance on row sums accepted when building a PredictionMatrix.
inline constexpr double kRowSumTolerance = 1e-6;
// Tolerance on row and column sums of a RankingDistribution.
inline constexpr double kDoublyStochasticTolerance = 1e-9;

// An n x L row-stochastic matrix. Row i is the predicted label distribution
// of individual i.
class PredictionMatrix {
 public:
  // Validates entries in [0, 1] and row sums within kRowSumTolerance of 1,
  // then renormalizes rows whose floating-point sum is not already 1.
  static absl::StatusOr<PredictionMatrix> Create(Matrix probabilities);
  static absl::StatusOr<PredictionMatrix> Create(
      const std::vector<std::vector<double>>& rows);

  int num_individuals() const { return probs_.rows(); }
  int num_labels() const { return probs_.cols(); }

  double prob(int individual, int label) const {
    return probs_(individual, label);
  }
  std::span<const double> row(int individual) const {
    return probs_.row(individual);
  }
  const Matrix& matrix() const { return probs_; }

  // Row i of the result is row perm[i] of this matrix.
  PredictionMatrix PermuteRows(std::span<const int> perm) const;
  // Appends an all-zero column, i.e. a new most-preferred label nobody has.
  PredictionMatrix AppendZeroLabel() const;

  friend bool operator==(const PredictionMatrix&,
                         const PredictionMatrix&) = default;

 private:
  explicit PredictionMatrix(Matrix m) : probs_(std::move(m)) {}
  Matrix probs_;
};

// n x n doubly stochastic matrix of rank marginals; entry (i, k) is the
// probability that individual i is placed at rank k.
class RankingDistribution {
 public:
  static absl::StatusOr<RankingDistribution> Create(Matrix marginals);
  // Skips validation. For producers that are doubly stochastic by
  // construction.
  static RankingDistribution FromTrusted(Matrix marginals) {
    return RankingDistribution(std::move(marginals));
  }
  static RankingDistribution Identity(int n);

  int size() const { return m_.rows(); }
  double operator()(int individual, int rank) const {
    return m_(individual, rank);
  }
  std::span<const double> row(int individual) const {
    return m_.row(individual);
  }
  const Matrix& matrix() const { return m_; }

  // Largest |row sum - 1| or |column sum - 1|.
  double MaxMarginalDeviation() const;

  // phi * a + (1 - phi) * b.
  static RankingDistribution Mix(const RankingDistribution& a,
                                 const RankingDistribution& b, double phi);

 private:
  explicit RankingDistribution(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

// Expected-utility class utility map tau(p) = sum_l v_l p_l with
// 0 <= v_1 < v_2 < ... < v_L.
class ClassUtilityMap {
 public:
  static absl::StatusOr<ClassUtilityMap> Create(std::vector<double> values);
  // v_l = l for l = 1..L.
  static ClassUtilityMap Linear(int num_labels);

  int num_labels() const { return static_cast<int>(values_.size()); }
  const std::vector<double>& values() const { return values_; }

  double Score(std::span<const double> distribution) const;
  std::vector<double> Scores(const PredictionMatrix& p) const;

 private:
  explicit ClassUtilityMap(std::vector<double> v) : values_(std::move(v)) {}
  std::vector<double> values_;
};

// Utility model: class utility map plus nonincreasing, nonnegative position
// weights w_1 >= ... >= w_n >= 0.
class UtilitySpec {
 public:
  static absl::StatusOr<UtilitySpec> Create(ClassUtilityMap tau,
                                            std::vector<double> weights);
  // DCG discount w_k = 1 / log2(1 + k), k = 1..n.
  static UtilitySpec Dcg(ClassUtilityMap tau, int n);

  const ClassUtilityMap& tau() const { return tau_; }
  const std::vector<double>& position_weights() const { return weights_; }

 private:
  UtilitySpec(ClassUtilityMap tau, std::vector<double> w)
      : tau_(std::move(tau)), weights_(std::move(w)) {}
  ClassUtilityMap tau_;
  std::vector<double> weights_;
};

}  // namespace uarank

#endif  // UARANK_TYPES_H_
