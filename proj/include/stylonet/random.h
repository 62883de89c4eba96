// Copyright 2026 The stylonet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STYLONET_RANDOM_H_
#define STYLONET_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace stylonet {

std::uint64_t splitmix64(std::uint64_t x);

// Child seed for realization `index` of a run seeded with `seed`. Depends
// only on the pair, so ensembles are reproducible in any evaluation order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Thin wrapper over mt19937_64 whose derived draws are computed here rather
// than by <random> distributions, whose output differs between standard
// libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform integer in [0, n). n must be > 0.
  std::uint64_t uniform_index(std::uint64_t n);
  // Uniform double in [0, 1).
  double uniform();
  // Standard normal (Box-Muller).
  double normal();

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = uniform_index(i);
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace stylonet

#endif  // STYLONET_RANDOM_H_
