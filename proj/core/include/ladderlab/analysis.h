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

#ifndef LADDERLAB_ANALYSIS_H_
#define LADDERLAB_ANALYSIS_H_

#include <cstdint>
#include <span>

#include "absl/status/statusor.h"
#include "ladderlab/rational.h"

namespace ladderlab {

// (n, k, M, eta, eps, delta). Each calculator reads the subset it needs.
struct BoundParams {
  int64_t n = 1;          // validation samples
  int64_t k = 1;          // total submissions
  int64_t accounts = 1;   // M
  double eta = 1.0;       // display precision, (0, 1]
  double epsilon = 0.05;  // deviation level, (0, 1]
  double delta = 0.05;    // failure probability, (0, 1]
};

absl::Status ValidateBoundParams(const BoundParams& p);

// Natural log of a probability bound. Values above 0 are vacuous.
struct LogBound {
  double log_value = 0.0;
  // exp(log_value) clamped at 1.
  double Probability() const;
};

// max_t |R_t - max_{i<=t} trueScore_i| for one account's displayed history.
absl::StatusOr<double> Lberr(std::span<const double> displayed,
                             std::span<const double> true_scores);

// min(1, 2k exp(-2 eps^2 n)) for k predictions fixed before the holdout is
// drawn.
double HoeffdingUnionBound(int64_t k, int64_t n, double epsilon);
LogBound HoeffdingUnionLogBound(int64_t k, int64_t n, double epsilon);

struct LadderTail {
  // -eta^2 n / 2 + (M/eta + 1) ln(2k) + 1
  LogBound relaxed;
  // ln 2 + (M/eta + 1) ln(2k) - eta^2 n / 2, the form before the factor 2
  // is absorbed into the +1.
  LogBound sharp;
};

// Tail bound on the Ladder's leaderboard error exceeding eta. Natural logs
// throughout.
LadderTail LadderTailBound(int64_t n, int64_t k, int64_t accounts, double eta);

struct EtaStar {
  // Root of g(eta) = -eta^2 n/2 + (M/eta + 1) ln(2k) + 1 - ln(delta), to
  // relative tolerance 1e-6, taken from the side where g <= 0.
  double root = 1.0;
  // Coarsest usable display precision 1/d with 1/d >= root, so the tail bound
  // at this precision is still <= delta.
  Precision precision;
};

// Returns FailedPrecondition ("insufficient samples") when g(1) > 0, i.e. no
// eta in (0, 1] reaches confidence delta.
absl::StatusOr<EtaStar> OptimalPrecision(int64_t n, int64_t k, int64_t accounts,
                                         double delta);

// Smallest n with g(eps) <= 0:
// ceil(2 ((M/eps + 1) ln(2k) + 1 - ln(delta)) / eps^2).
absl::StatusOr<int64_t> SampleComplexity(double epsilon, int64_t k,
                                         int64_t accounts, double delta);

struct CompressionBits {
  // ceil(log2 k) + M * floor(1/eta) * ceil(log2 k)
  int64_t bits = 0;
  // (M/eta + 1) log2(2k)
  double budget = 0.0;
  bool holds() const { return static_cast<double>(bits) <= budget; }
};

absl::StatusOr<CompressionBits> CompressionBitCount(int64_t k, int64_t accounts,
                                                    Precision eta);

// ceil(log2 x) for x >= 1.
int64_t CeilLog2(uint64_t x);

}  // namespace ladderlab

#endif  // LADDERLAB_ANALYSIS_H_
