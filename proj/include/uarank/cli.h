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

// Batch command-line front end.
//
//   uarank rank      --fn ua|opt|mix|pl --in P.csv [--phi] [--values]
//                    [--samples --seed]
//   uarank stability --fn ... --in P.csv --in2 Q.csv
//   uarank utility   --fn ... --in P.csv [--values 1,2,3] [--weights dcg|FILE]
//   uarank oracle    --fn ua|pl --in P.csv
//   uarank audit multiaccuracy    --model M.json
//   uarank audit multicalibration --model M.json --delta D
//   uarank audit theorem   --model M.json --fn ua|opt|mix --n N --k K
//                          --group G [--delta D --bucket J1,..,JL]
//                          (--exact | --samples S --seed X)
//   uarank audit closeness --model M.json --n N --samples S --seed X
//
// Common flags: --format table|structured, --out FILE, --threads T.
// Exit status is 0 on success, 1 on validation or I/O errors and 2 when a
// budget guard refuses the request. Errors go to stderr as a single line
// `error[<category>]: <message>` with category validation, io or budget.

#ifndef UARANK_CLI_H_
#define UARANK_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace uarank {

enum class OutputFormat { kTable, kStructured };

struct RunConfig {
  std::string command;     // rank, stability, utility, audit, oracle
  std::string audit_kind;  // multiaccuracy, multicalibration, theorem, closeness
  std::string in;
  std::string in2;
  std::string model;
  std::string out;
  std::optional<std::string> fn;
  std::optional<double> phi;
  std::optional<uint64_t> seed;
  std::optional<int64_t> samples;
  std::optional<double> delta;
  std::optional<std::vector<int>> bucket;  // zero-based
  std::optional<int> n;
  std::optional<int> k;  // one-based, as given on the command line
  std::optional<std::string> group;
  bool exact = false;
  std::optional<std::string> values;
  std::optional<std::string> weights;
  int threads = 1;
  OutputFormat format = OutputFormat::kTable;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitBudget = 2;

// Parses argv (argv[0] is the program name). Help requests come back as
// kCancelled with the help text as the message.
absl::StatusOr<RunConfig> ParseCommandLine(int argc, const char* const* argv);

// Checks cross-flag requirements before any file is read.
absl::Status ValidateRunConfig(const RunConfig& config);

// Executes the command, writing the report to `out` (or config.out) and any
// error line to `err`. Returns the exit code.
int Run(const RunConfig& config, std::ostream& out, std::ostream& err);

// ParseCommandLine followed by Run.
int RunCommandLine(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err);

// "validation", "budget" or "io".
const char* ErrorCategory(const absl::Status& status);
int ExitCodeFor(const absl::Status& status);

}  // namespace uarank

#endif  // UARANK_CLI_H_
