//
// Copyright 2026 The LadderLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef LADDERLAB_RNG_H_
#define LADDERLAB_RNG_H_

#include <cstdint>
#include <random>
#include <vector>

namespace ladderlab {

// Generator "ladderlab-rng-v1".
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Its 64-bit seed is SplitMix64(seed). Every derived quantity
// (uniform doubles, bounded integers, Bernoulli draws, random bit vectors) is
// computed from raw engine output by the routines below, never by the
// implementation-defined <random> distributions, so a seed produces the same
// stream on every platform.
//
// Stream-split rule: trial i of an experiment with base seed b uses trial seed
// b + i. Inside a trial, independent substreams are opened with
// Rng::ForStream(trial_seed, stream_id).
class Rng {
 public:
  static constexpr const char* kName = "ladderlab-rng-v1";

  explicit Rng(uint64_t seed);
  static Rng ForStream(uint64_t seed, uint64_t stream_id);

  uint64_t NextU64() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double UniformDouble();
  // Uniform on {0, ..., bound - 1}; bound >= 1.
  uint64_t UniformInt(uint64_t bound);
  // 1 with probability p; p <= 0 never fires, p >= 1 always fires.
  bool Bernoulli(double p);
  // n independent fair bits.
  std::vector<uint8_t> RandomBits(size_t n);
  // Fisher-Yates shuffle of {0, ..., n - 1}.
  std::vector<size_t> Permutation(size_t n);

 private:
  std::mt19937_64 engine_;
};

uint64_t SplitMix64(uint64_t x);

// Seed of substream `stream_id` of `seed`.
uint64_t StreamSeed(uint64_t seed, uint64_t stream_id);

// Named substreams of a trial.
inline constexpr uint64_t kLabelStream = 1;
inline constexpr uint64_t kAttackStream = 2;

}  // namespace ladderlab

#endif  // LADDERLAB_RNG_H_
