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

#include "ladderlab/rng.h"

#include <utility>

namespace ladderlab {

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(uint64_t seed) : engine_(SplitMix64(seed)) {}

uint64_t StreamSeed(uint64_t seed, uint64_t stream_id) {
  return SplitMix64(seed) ^ SplitMix64(~stream_id);
}

Rng Rng::ForStream(uint64_t seed, uint64_t stream_id) {
  return Rng(StreamSeed(seed, stream_id));
}

double Rng::UniformDouble() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

uint64_t Rng::UniformInt(uint64_t bound) {
  // Rejection on the top of the range keeps the draw exactly uniform.
  const uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

bool Rng::Bernoulli(double p) { return UniformDouble() < p; }

std::vector<uint8_t> Rng::RandomBits(size_t n) {
  std::vector<uint8_t> bits(n);
  uint64_t word = 0;
  for (size_t i = 0; i < n; ++i) {
    if (i % 64 == 0) word = engine_();
    bits[i] = static_cast<uint8_t>(word & 1);
    word >>= 1;
  }
  return bits;
}

std::vector<size_t> Rng::Permutation(size_t n) {
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  for (size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[UniformInt(i)]);
  }
  return order;
}

}  // namespace ladderlab
