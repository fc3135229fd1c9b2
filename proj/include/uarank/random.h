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

#ifndef UARANK_RANDOM_H_
#define UARANK_RANDOM_H_

#include <cstdint>
#include <functional>
#include <limits>

namespace uarank {

// Counter-based 64-bit generator. Output number c of stream s under seed k is
// a fixed bijective mix of (k, s, c), so independent streams can be handed to
// workers without sharing state and a given (seed, stream) always replays the
// same sequence. Satisfies UniformRandomBitGenerator.
class CounterRng {
 public:
  using result_type = uint64_t;

  CounterRng(uint64_t seed, uint64_t stream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<uint64_t>::max();
  }

  result_type operator()();

  // Uniform on the open interval (0, 1); never returns 0 or 1.
  double UniformOpen();
  // Standard Gumbel(0, 1): -log(-log(U)).
  double Gumbel();
  // Index drawn with probability proportional to cumulative[i] -
  // cumulative[i-1]; `cumulative` is nondecreasing and ends at ~1.
  int Discrete(const double* cumulative, int size);

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

// Runs body(task) for task in [0, num_tasks) on up to `num_threads` threads.
// Tasks are claimed dynamically; callers must write results into per-task
// slots so the outcome does not depend on scheduling.
void ParallelFor(int num_tasks, int num_threads,
                 const std::function<void(int)>& body);

}  // namespace uarank

#endif  // UARANK_RANDOM_H_
