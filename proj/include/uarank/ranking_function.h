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

#ifndef UARANK_RANKING_FUNCTION_H_
#define UARANK_RANKING_FUNCTION_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "uarank/types.h"

namespace uarank {

enum class RankingFunctionId { kUa, kOpt, kMix, kPl };

std::string_view RankingFunctionName(RankingFunctionId id);
absl::StatusOr<RankingFunctionId> ParseRankingFunctionId(std::string_view name);

// A ranking function together with everything needed to evaluate it.
struct RankingFunctionParams {
  RankingFunctionId id = RankingFunctionId::kUa;
  // Class utility map for opt/mix/pl. Defaults to v_l = l when unset.
  std::optional<ClassUtilityMap> tau;
  double phi = 1.0;           // mix only
  int64_t samples = 100'000;  // pl only
  uint64_t seed = 0;          // pl only
  int num_threads = 1;

  // tau, or the linear default for `num_labels` labels.
  ClassUtilityMap TauOrDefault(int num_labels) const;
};

// Checks parameter preconditions (phi range, sample count, tau arity) before
// any computation starts.
absl::Status ValidateRankingFunctionParams(const RankingFunctionParams& params,
                                           int num_labels);

absl::StatusOr<RankingDistribution> ApplyRankingFunction(
    const RankingFunctionParams& params, const PredictionMatrix& p);

}  // namespace uarank

#endif  // UARANK_RANKING_FUNCTION_H_
