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

#include "uarank/population.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "uarank/types.h"

namespace uarank {
namespace {

absl::Status CheckDistribution(std::vector<double>& dist, int num_labels,
                               const std::string& type_name,
                               const char* what) {
  if (static_cast<int>(dist.size()) != num_labels) {
    return absl::InvalidArgumentError(
        absl::StrFormat("type '%s': %s has %d entries, expected %d", type_name,
                        what, dist.size(), num_labels));
  }
  double sum = 0.0;
  for (double v : dist) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "type '%s': %s entry %g outside [0, 1]", type_name, what, v));
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kRowSumTolerance) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "type '%s': %s sums to %.10g, expected 1", type_name, what, sum));
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    for (double& v : dist) v /= sum;
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<PopulationModel> PopulationModel::Create(
    int num_labels, std::vector<PopulationType> types,
    std::vector<PopulationGroup> groups) {
  if (num_labels < 1) {
    return absl::InvalidArgumentError("population needs at least one label");
  }
  if (types.empty()) {
    return absl::InvalidArgumentError("population needs at least one type");
  }
  double weight_sum = 0.0;
  std::set<std::string> type_names;
  for (PopulationType& t : types) {
    if (!type_names.insert(t.name).second) {
      return absl::InvalidArgumentError(
          absl::StrFormat("duplicate type name '%s'", t.name));
    }
    if (!std::isfinite(t.weight) || t.weight < 0.0) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "type '%s': weight %g must be nonnegative", t.name, t.weight));
    }
    weight_sum += t.weight;
    if (auto s = CheckDistribution(t.ground_truth, num_labels, t.name,
                                   "groundTruth");
        !s.ok()) {
      return s;
    }
    if (auto s = CheckDistribution(t.predicted, num_labels, t.name,
                                   "predicted");
        !s.ok()) {
      return s;
    }
  }
  if (std::abs(weight_sum - 1.0) > 1e-9) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "type weights sum to %.10g, expected 1 within 1e-9", weight_sum));
  }

  const int num_types = static_cast<int>(types.size());
  std::set<std::string> group_names;
  int full = -1;
  for (size_t g = 0; g < groups.size(); ++g) {
    PopulationGroup& group = groups[g];
    if (!group_names.insert(group.name).second) {
      return absl::InvalidArgumentError(
          absl::StrFormat("duplicate group name '%s'", group.name));
    }
    if (group.members.empty()) {
      return absl::InvalidArgumentError(
          absl::StrFormat("group '%s' is empty", group.name));
    }
    for (int m : group.members) {
      if (m < 0 || m >= num_types) {
        return absl::InvalidArgumentError(absl::StrFormat(
            "group '%s': member index %d out of range", group.name, m));
      }
    }
    std::sort(group.members.begin(), group.members.end());
    group.members.erase(std::unique(group.members.begin(), group.members.end()),
                        group.members.end());
    if (full < 0 && static_cast<int>(group.members.size()) == num_types) {
      full = static_cast<int>(g);
    }
  }
  if (full < 0) {
    if (group_names.count(std::string(kFullDomainGroup)) > 0) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "group '%s' is reserved for the full domain",
          std::string(kFullDomainGroup)));
    }
    PopulationGroup all{std::string(kFullDomainGroup), {}};
    for (int t = 0; t < num_types; ++t) all.members.push_back(t);
    groups.push_back(std::move(all));
    full = static_cast<int>(groups.size()) - 1;
  }

  PopulationModel model;
  model.num_labels_ = num_labels;
  model.types_ = std::move(types);
  model.groups_ = std::move(groups);
  model.full_domain_group_ = full;
  model.membership_.assign(model.groups_.size() * num_types, false);
  for (size_t g = 0; g < model.groups_.size(); ++g) {
    for (int m : model.groups_[g].members) {
      model.membership_[g * num_types + m] = true;
    }
  }
  return model;
}

absl::StatusOr<int> PopulationModel::FindGroup(std::string_view name) const {
  for (int g = 0; g < num_groups(); ++g) {
    if (groups_[g].name == name) return g;
  }
  return absl::InvalidArgumentError(
      absl::StrFormat("unknown group '%s'", std::string(name)));
}

}  // namespace uarank
