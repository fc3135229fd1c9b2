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

#include "uarank/ranking_function.h"

#include "absl/strings/str_format.h"
#include "uarank/rank_core.h"

namespace uarank {

std::string_view RankingFunctionName(RankingFunctionId id) {
  switch (id) {
    case RankingFunctionId::kUa:
      return "ua";
    case RankingFunctionId::kOpt:
      return "opt";
    case RankingFunctionId::kMix:
      return "mix";
    case RankingFunctionId::kPl:
      return "pl";
  }
  return "unknown";
}

absl::StatusOr<RankingFunctionId> ParseRankingFunctionId(
    std::string_view name) {
  if (name == "ua") return RankingFunctionId::kUa;
  if (name == "opt") return RankingFunctionId::kOpt;
  if (name == "mix") return RankingFunctionId::kMix;
  if (name == "pl") return RankingFunctionId::kPl;
  return absl::InvalidArgumentError(absl::StrFormat(
      "unknown ranking function '%s' (expected ua, opt, mix or pl)", std::string(name)));
}

ClassUtilityMap RankingFunctionParams::TauOrDefault(int num_labels) const {
  return tau.has_value() ? *tau : ClassUtilityMap::Linear(num_labels);
}

absl::Status ValidateRankingFunctionParams(const RankingFunctionParams& params,
                                           int num_labels) {
  if (params.tau.has_value() && params.tau->num_labels() != num_labels) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "utility map has %d label values but predictions have %d labels",
        params.tau->num_labels(), num_labels));
  }
  if (params.id == RankingFunctionId::kMix &&
      !(params.phi >= 0.0 && params.phi <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("mixture weight phi = %g outside [0, 1]", params.phi));
  }
  if (params.id == RankingFunctionId::kPl && params.samples < 1) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "Plackett-Luce needs at least one sample, got %d", params.samples));
  }
  if (params.num_threads < 1) {
    return absl::InvalidArgumentError("thread count must be at least 1");
  }
  return absl::OkStatus();
}

absl::StatusOr<RankingDistribution> ApplyRankingFunction(
    const RankingFunctionParams& params, const PredictionMatrix& p) {
  if (auto s = ValidateRankingFunctionParams(params, p.num_labels());
      !s.ok()) {
    return s;
  }
  const UaRankOptions ua_options{.num_threads = params.num_threads};
  switch (params.id) {
    case RankingFunctionId::kUa:
      return UaRank(p, ua_options);
    case RankingFunctionId::kOpt:
      return OptRank(p, params.TauOrDefault(p.num_labels()));
    case RankingFunctionId::kMix:
      return MixRank(p, params.TauOrDefault(p.num_labels()), params.phi,
                     ua_options);
    case RankingFunctionId::kPl:
      return PlRank(p, params.TauOrDefault(p.num_labels()),
                    PlOptions{.samples = params.samples,
                              .seed = params.seed,
                              .num_threads = params.num_threads});
  }
  return absl::InternalError("unhandled ranking function");
}

}  // namespace uarank
