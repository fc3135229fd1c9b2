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

// File formats.
//
// Prediction matrices are CSV: an optional header row `label_1,...,label_L`
// followed by one row of L decimal probabilities per individual.
//
// Population models are JSON documents:
//   {
//     "labels": 2,
//     "types": [
//       {"name": "1", "weight": 0.5,
//        "groundTruth": [0.5, 0.5], "predicted": [0.4, 0.6]},
//       ...
//     ],
//     "groups": [{"name": "1", "members": ["1"]}, ...]
//   }
// Group members refer to type names. A full-domain group named "all" is
// added when no group covers every type.

#ifndef UARANK_IO_H_
#define UARANK_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "uarank/population.h"
#include "uarank/types.h"

namespace uarank {

absl::StatusOr<std::string> ReadFile(const std::string& path);

absl::StatusOr<PredictionMatrix> ParsePredictionCsv(std::string_view text);
absl::StatusOr<PredictionMatrix> LoadPredictionMatrix(const std::string& path);

// Header row plus one row per individual, 17 significant digits.
std::string FormatPredictionCsv(const PredictionMatrix& p);
// Rows of a square matrix, 17 significant digits, no header.
std::string FormatMatrixCsv(const Matrix& m);

absl::StatusOr<PopulationModel> ParsePopulationModel(std::string_view text);
absl::StatusOr<PopulationModel> LoadPopulationModel(const std::string& path);
std::string FormatPopulationModel(const PopulationModel& pop);

// Comma or whitespace separated decimal numbers, e.g. "1,2,3".
absl::StatusOr<std::vector<double>> ParseNumberList(std::string_view text);

}  // namespace uarank

#endif  // UARANK_IO_H_
