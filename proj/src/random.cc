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

#include "uarank/random.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

namespace uarank {
namespace {

constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer.
uint64_t Mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(uint64_t seed, uint64_t stream)
    : key_(Mix64(Mix64(seed + kGolden) ^ Mix64(stream * kGolden + 1))) {}

CounterRng::result_type CounterRng::operator()() {
  ++counter_;
  return Mix64(key_ + counter_ * kGolden);
}

double CounterRng::UniformOpen() {
  // 53 random bits mapped to the midpoints of 2^53 equal cells of (0, 1).
  const uint64_t bits = (*this)() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double CounterRng::Gumbel() { return -std::log(-std::log(UniformOpen())); }

int CounterRng::Discrete(const double* cumulative, int size) {
  const double u = UniformOpen() * cumulative[size - 1];
  const double* it = std::upper_bound(cumulative, cumulative + size, u);
  return std::min(static_cast<int>(it - cumulative), size - 1);
}

void ParallelFor(int num_tasks, int num_threads,
                 const std::function<void(int)>& body) {
  const int workers = std::clamp(num_threads, 1, std::max(num_tasks, 1));
  if (workers == 1) {
    for (int t = 0; t < num_tasks; ++t) body(t);
    return;
  }
  std::atomic<int> next{0};
  auto drain = [&] {
    for (int t = next.fetch_add(1); t < num_tasks; t = next.fetch_add(1)) {
      body(t);
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (int w = 1; w < workers; ++w) pool.emplace_back(drain);
  drain();
}

}  // namespace uarank
