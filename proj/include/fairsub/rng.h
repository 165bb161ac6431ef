// Copyright 2026 The Authors.
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

#ifndef FAIRSUB_RNG_H_
#define FAIRSUB_RNG_H_

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "fairsub/itemset.h"

namespace fairsub {

// Deterministic RNG. Distributions are implemented on top of the raw 64-bit
// stream (std::uniform_*_distribution output is not pinned by the standard,
// which would break cross-toolchain reproducibility of seeded runs).
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(Scramble(seed)) {}

  // Independent stream for one trial of a seeded experiment. Results do not
  // depend on the order in which trials are executed.
  static Rng ForTrial(uint64_t master_seed, uint64_t trial_index) {
    return Rng(Scramble(master_seed + 0x9E3779B97F4A7C15ULL * (trial_index + 1)));
  }

  uint64_t NextU64() { return engine_(); }

  // Uniform in [lo, hi], inclusive. Unbiased via bitmask rejection.
  int UniformInt(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("Rng::UniformInt: empty range");
    uint64_t range = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo);
    if (range == 0) return lo;
    uint64_t mask = ~uint64_t{0} >> std::countl_zero(range);
    uint64_t draw;
    do {
      draw = NextU64() & mask;
    } while (draw > range);
    return lo + static_cast<int>(draw);
  }

  // Uniform in [0, 1).
  double UniformReal() { return static_cast<double>(NextU64() >> 11) * 0x1.0p-53; }

  double UniformReal(double lo, double hi) { return lo + (hi - lo) * UniformReal(); }

  bool Bernoulli(double p) { return UniformReal() < p; }

  template <typename T>
  void Shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(UniformInt(0, static_cast<int>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

  // k distinct items drawn uniformly from `pool`, as a set.
  ItemSet SampleWithoutReplacement(ItemSet pool, int k) {
    int sz = pool.Size();
    if (k < 0 || k > sz) {
      throw std::invalid_argument("Rng::SampleWithoutReplacement: k out of range");
    }
    if (k == sz) return pool;
    std::vector<int> items = pool.ToVector();
    ItemSet out;
    // Partial Fisher-Yates: the first k slots are a uniform k-subset.
    for (int i = 0; i < k; ++i) {
      int j = UniformInt(i, sz - 1);
      std::swap(items[i], items[j]);
      out.Add(items[i]);
    }
    return out;
  }

 private:
  static uint64_t Scramble(uint64_t x) {
    // splitmix64 finalizer; spreads low-entropy seeds over the full state.
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace fairsub

#endif  // FAIRSUB_RNG_H_
