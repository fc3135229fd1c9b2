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

#ifndef UARANK_POPULATION_H_
#define UARANK_POPULATION_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace uarank {

// One individual type of a finite population: its sampling weight, its
// ground-truth label distribution f*(x) and the predictor's f(x).
struct PopulationType {
  std::string name;
  double weight = 0.0;
  std::vector<double> ground_truth;
  std::vector<double> predicted;
};

// A protected group, as a set of type indices.
struct PopulationGroup {
  std::string name;
  std::vector<int> members;
};

// Finite typed population: the sampling distribution over individuals,
// ground truth, predictor and the group collection audited against.
class PopulationModel {
 public:
  // Name of the full-domain group added when no group covers every type.
  static constexpr std::string_view kFullDomainGroup = "all";

  static absl::StatusOr<PopulationModel> Create(
      int num_labels, std::vector<PopulationType> types,
      std::vector<PopulationGroup> groups);

  int num_labels() const { return num_labels_; }
  int num_types() const { return static_cast<int>(types_.size()); }
  int num_groups() const { return static_cast<int>(groups_.size()); }

  const PopulationType& type(int t) const { return types_[t]; }
  const std::vector<PopulationType>& types() const { return types_; }
  const PopulationGroup& group(int g) const { return groups_[g]; }
  const std::vector<PopulationGroup>& groups() const { return groups_; }

  bool InGroup(int group, int type) const {
    return membership_[static_cast<size_t>(group) * types_.size() + type];
  }
  // Index of a group covering the whole domain. Always exists.
  int full_domain_group() const { return full_domain_group_; }

  absl::StatusOr<int> FindGroup(std::string_view name) const;

 private:
  PopulationModel() = default;

  int num_labels_ = 0;
  std::vector<PopulationType> types_;
  std::vector<PopulationGroup> groups_;
  std::vector<bool> membership_;
  int full_domain_group_ = 0;
};

}  // namespace uarank

#endif  // UARANK_POPULATION_H_
